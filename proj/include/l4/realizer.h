// Copyright 2026 The L4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Natural-language rendering of questions and answers.

#ifndef L4_REALIZER_H_
#define L4_REALIZER_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "l4/asp.h"
#include "l4/lexicon.h"
#include "l4/question.h"
#include "l4/reasoner.h"

namespace l4 {

// How a predicate surfaces in a clause: which argument is the subject,
// which is the object, and the words around them.
struct Frame {
  enum class Kind {
    kCopula,   // "x is a player", "x is a member of y"
    kVerb,     // "x throws y", "x participates in y"
    kLiteral,  // anything else; slots are filled in place
  };

  Kind kind = Kind::kVerb;
  size_t subject = 0;
  std::optional<size_t> object;
  std::vector<size_t> extra;  // further arguments, appended in order
  std::string lemma;          // kVerb
  std::string noun;           // kCopula, nominal complement
  std::string adjective;      // kCopula, non-nominal complement
  std::string particles;      // words between verb or noun and object
  std::string trailing;       // words after the object
  std::vector<PhraseTemplate::Part> parts;  // kLiteral
  std::vector<size_t> slot_args;            // kLiteral, one per slot part

  bool transitive() const { return object.has_value(); }
  // Copulas before verbs, intransitive before transitive.
  int Rank() const;
  bool operator==(const Frame&) const = default;
};

Frame MakeFrame(const NormalizedPredicate& predicate,
                const PhraseTemplate& phrase,
                const MorphLexicon& morph = DefaultMorphology());

struct RealizerContext {
  const CompiledProgram* compiled = nullptr;
  const Lexicon* lexicon = nullptr;
  std::map<std::string, std::string> names;  // constant -> display name
  // Classes with a single instance introduced by an existence question.
  // Questions refer to that instance by its class noun.
  std::set<std::string> singleton_classes;

  Frame FrameOf(std::string_view predicate) const;
  const NormalizedPredicate* PredicateOf(std::string_view predicate) const;
  std::string Display(std::string_view constant) const;
  std::string Noun(std::string_view class_name) const;
  bool Animate(std::string_view class_name) const;
  bool IsEnumeratedConstant(std::string_view constant) const;
};

// Tracks which referents a realization pass has mentioned. Later mentions
// of a referent are definite.
class InfoState {
 public:
  bool Mentioned(std::string_view referent) const {
    return mentioned_.count(std::string(referent)) > 0;
  }
  void Mention(std::string_view referent) {
    mentioned_.insert(std::string(referent));
  }

 private:
  std::set<std::string> mentioned_;
};

// ---- Questions -----------------------------------------------------------

enum class Definiteness { kIndefinite, kDefinite, kProper };

struct NounPhrase {
  std::string text;  // noun, proper name or placeholder
  Definiteness definiteness = Definiteness::kProper;
  bool operator==(const NounPhrase&) const = default;
};

// The predicate of a question with its non-questioned arguments.
struct QuestionVP {
  Frame frame;
  std::map<size_t, NounPhrase> args;
  bool operator==(const QuestionVP&) const = default;
};

struct ExistQ {
  std::string noun;
  bool plural = false;
  bool operator==(const ExistQ&) const = default;
};
struct PolarQ {
  QuestionVP vp;
  bool operator==(const PolarQ&) const = default;
};
// The questioned argument is the subject.
struct WhoQ {
  QuestionVP vp;
  bool operator==(const WhoQ&) const = default;
};
struct WhichQ {
  std::string noun;
  bool plural = false;
  QuestionVP vp;
  bool operator==(const WhichQ&) const = default;
};
// The questioned argument is the object: "Which sign does Alice throw?"
struct WhichSlashQ {
  std::string noun;
  bool animate = false;
  QuestionVP vp;
  bool operator==(const WhichSlashQ&) const = default;
};

using QuestionTree = std::variant<ExistQ, PolarQ, WhoQ, WhichQ, WhichSlashQ>;

// Arguments bound by a template expansion are realized as `{Class}`
// placeholders unless the class is a singleton. Updates `info`.
QuestionTree BuildQuestion(const Question& question,
                           const RealizerContext& context, InfoState* info);
std::string Linearize(const QuestionTree& tree, const RealizerContext& context);

std::string RealizeQuestion(const Question& question,
                            const RealizerContext& context, InfoState* info);

// "Are there more players?"
std::string RealizeLoopPrompt(const Question& question,
                              const RealizerContext& context);

// ---- Declaratives ----------------------------------------------------------

// One predicate of a coordinated sentence; the subject position of `atom`
// is left empty.
struct PredicatePhrase {
  GroundAtom atom;
  Frame frame;
  bool operator==(const PredicatePhrase&) const = default;
};

// "Alice and Bob are players and participate in RPS."
struct Declarative {
  std::vector<std::string> subjects;
  std::vector<PredicatePhrase> predicates;
  bool operator==(const Declarative&) const = default;
};

// Coordinates subjects that share a predicate and arguments, then
// predicates that share a subject list. Lossless: Deaggregate returns the
// input atoms as a set.
std::vector<Declarative> Aggregate(const std::vector<GroundAtom>& atoms,
                                   const RealizerContext& context);
std::vector<GroundAtom> Deaggregate(const std::vector<Declarative>& decls);

std::string RealizeDeclarative(const Declarative& decl,
                               const RealizerContext& context);

// ---- Answers ---------------------------------------------------------------

struct RealizedText {
  std::string text;
  std::string html;
  bool operator==(const RealizedText&) const = default;
};

// Explains `conclusion` from its answer sets. A single distinct set gives
// "X, because ..."; several give a shared "all of" block and a "one of"
// block of alternatives. Throws Error(kEmptyAnswer) for no sets and
// Error(kInvalidArgument) when a set has a different conclusion.
RealizedText RealizeAnswer(const GroundAtom& conclusion,
                           const std::vector<AnswerSet>& answer_sets,
                           const RealizerContext& context);

// Every conclusion in atom order, separated by blank lines.
RealizedText RealizeAnswers(const std::vector<AnswerSet>& answer_sets,
                            const RealizerContext& context);

// "Nobody wins RPS." followed by the facts that bear on it, or
// "No game exists." when an argument class has no instances.
RealizedText RealizeNoAnswer(const QuerySpec& goal, const FactBase& facts,
                             const RealizerContext& context);

std::string HtmlEscape(std::string_view text);

}  // namespace l4

#endif  // L4_REALIZER_H_
