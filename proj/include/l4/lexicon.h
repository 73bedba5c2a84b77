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

// English phrase templates for predicates and classes, plus the small
// amount of morphology the realizer needs.

#ifndef L4_LEXICON_H_
#define L4_LEXICON_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l4/diagnostic.h"
#include "l4/sem.h"

namespace l4 {

struct PhraseTemplate {
  enum class Kind { kVerbPhrase, kSlotTemplate, kNounPhrase };

  struct Part {
    bool is_slot = false;
    std::string text;  // a literal word, or the class name of a slot
    bool operator==(const Part&) const = default;
  };

  Kind kind = Kind::kVerbPhrase;
  // kVerbPhrase: verb lemma. kNounPhrase: noun lemma.
  std::string lemma;
  // kVerbPhrase: words after the verb ("in", "part in").
  std::optional<std::string> preposition;
  bool animate = false;     // kNounPhrase
  std::vector<Part> parts;  // kSlotTemplate

  static PhraseTemplate Verb(std::string lemma,
                             std::optional<std::string> preposition = {});
  static PhraseTemplate Noun(std::string lemma, bool animate);

  bool operator==(const PhraseTemplate&) const = default;
};

enum class Number { kSingular, kPlural };

class MorphLexicon {
 public:
  // player, participant, person (animate); game, sign; copula and a few
  // irregular verbs.
  static MorphLexicon Seeded();

  void AddNoun(std::string word, std::string plural, bool animate);

  // One noun per line: `word,plural,animate?`. The third field is
  // `animate`/`yes`/`true`/`1` or empty. Blank lines and `#` comments are
  // ignored. Throws Error(kInvalidArgument) naming the offending line.
  void LoadConfig(std::string_view text);

  std::string Plural(std::string_view noun) const;
  bool IsAnimate(std::string_view noun) const;
  std::optional<std::string> IrregularThirdSingular(
      std::string_view lemma) const;
  std::optional<std::string> IrregularLemma(std::string_view form) const;

 private:
  struct NounEntry {
    std::string plural;
    bool animate = false;
  };
  std::map<std::string, NounEntry, std::less<>> nouns_;
  std::map<std::string, std::string, std::less<>> verbs_;  // lemma -> 3sg
};

const MorphLexicon& DefaultMorphology();

std::string InflectVerb(std::string_view lemma, Number number,
                        const MorphLexicon& morph = DefaultMorphology());

// Inverse of the 3sg rule: "participates" -> "participate".
std::string VerbLemma(std::string_view word,
                      const MorphLexicon& morph = DefaultMorphology());

std::string IndefArticle(std::string_view noun);

// "RuleSet" -> "rule set".
std::string SplitIdentifier(std::string_view identifier);

// Throws Error(kDiagnostics) carrying a SlotClassMismatch diagnostic when
// the bracketed classes are not a permutation of the predicate's arguments.
PhraseTemplate ParseEntry(std::string_view raw,
                          const NormalizedPredicate& predicate,
                          const MorphLexicon& morph = DefaultMorphology());

class Lexicon {
 public:
  Lexicon() : morph_(MorphLexicon::Seeded()) {}

  // Collects the program's lexicon annotations. Bad entries are reported
  // and fall back to the identifier.
  static Lexicon Build(const NormalizedProgram& program, MorphLexicon morph,
                       std::vector<Diagnostic>* diagnostics = nullptr);

  // The entry for a predicate, or the identifier read as a verb phrase.
  // Membership predicates are read as their class noun.
  PhraseTemplate TemplateFor(const NormalizedPredicate& predicate) const;
  bool HasEntry(std::string_view key) const;

  std::string NounFor(std::string_view class_name) const;
  bool IsAnimate(std::string_view class_name) const;

  const MorphLexicon& morph() const { return morph_; }

 private:
  std::map<std::string, PhraseTemplate, std::less<>> entries_;
  std::map<std::string, std::string, std::less<>> class_nouns_;
  MorphLexicon morph_;
};

}  // namespace l4

#endif  // L4_LEXICON_H_
