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

#include "l4/lexicon.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace l4 {
namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsVowel(char c) {
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool Sibilant(std::string_view w) {
  return EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
         EndsWith(w, "ch") || EndsWith(w, "sh");
}

// Regular English -s suffixation shared by nouns and verbs.
std::string AddS(std::string_view w) {
  if (w.empty()) return std::string(w);
  if (Sibilant(w)) return std::string(w) + "es";
  if (w.size() >= 2 && w.back() == 'y' && !IsVowel(w[w.size() - 2])) {
    return std::string(w.substr(0, w.size() - 1)) + "ies";
  }
  return std::string(w) + "s";
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string Trim(std::string_view s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> Words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string LastWord(std::string_view phrase) {
  auto words = Words(phrase);
  return words.empty() ? std::string() : words.back();
}

}  // namespace

PhraseTemplate PhraseTemplate::Verb(std::string lemma,
                                    std::optional<std::string> preposition) {
  PhraseTemplate t;
  t.kind = Kind::kVerbPhrase;
  t.lemma = std::move(lemma);
  t.preposition = std::move(preposition);
  return t;
}

PhraseTemplate PhraseTemplate::Noun(std::string lemma, bool animate) {
  PhraseTemplate t;
  t.kind = Kind::kNounPhrase;
  t.lemma = std::move(lemma);
  t.animate = animate;
  return t;
}

MorphLexicon MorphLexicon::Seeded() {
  MorphLexicon m;
  m.AddNoun("player", "players", true);
  m.AddNoun("participant", "participants", true);
  m.AddNoun("person", "people", true);
  m.AddNoun("game", "games", false);
  m.AddNoun("sign", "signs", false);
  m.verbs_ = {{"be", "is"}, {"have", "has"}, {"do", "does"}, {"go", "goes"}};
  return m;
}

void MorphLexicon::AddNoun(std::string word, std::string plural, bool animate) {
  nouns_[std::move(word)] = {std::move(plural), animate};
}

void MorphLexicon::LoadConfig(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(Trim(f));
    if (line.back() == ',') fields.emplace_back();
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lexicon config line " + std::to_string(lineno) +
                      ": expected word,plural,animate?");
    }
    std::string flag = fields.size() == 3 ? Lower(fields[2]) : "";
    bool animate = flag == "animate" || flag == "yes" || flag == "true" ||
                   flag == "1";
    if (!animate && !flag.empty() && flag != "inanimate" && flag != "no" &&
        flag != "false" && flag != "0") {
      throw Error(ErrorCode::kInvalidArgument,
                  "lexicon config line " + std::to_string(lineno) +
                      ": bad animacy flag '" + fields[2] + "'");
    }
    std::string plural = fields[1].empty() ? AddS(fields[0]) : fields[1];
    AddNoun(Lower(fields[0]), plural, animate);
  }
}

std::string MorphLexicon::Plural(std::string_view noun) const {
  auto words = Words(noun);
  if (words.empty()) return {};
  std::string head = words.back();
  auto it = nouns_.find(head);
  words.back() = it != nouns_.end() ? it->second.plural : AddS(head);
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += " ";
    out += words[i];
  }
  return out;
}

bool MorphLexicon::IsAnimate(std::string_view noun) const {
  auto it = nouns_.find(LastWord(noun));
  return it != nouns_.end() && it->second.animate;
}

std::optional<std::string> MorphLexicon::IrregularThirdSingular(
    std::string_view lemma) const {
  auto it = verbs_.find(lemma);
  if (it == verbs_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> MorphLexicon::IrregularLemma(
    std::string_view form) const {
  if (form == "are") return "be";
  for (const auto& [lemma, third] : verbs_) {
    if (third == form) return lemma;
  }
  return std::nullopt;
}

const MorphLexicon& DefaultMorphology() {
  static const MorphLexicon kMorph = MorphLexicon::Seeded();
  return kMorph;
}

std::string InflectVerb(std::string_view lemma, Number number,
                        const MorphLexicon& morph) {
  if (number == Number::kPlural) {
    return lemma == "be" ? "are" : std::string(lemma);
  }
  if (auto irregular = morph.IrregularThirdSingular(lemma)) return *irregular;
  return AddS(lemma);
}

std::string VerbLemma(std::string_view word, const MorphLexicon& morph) {
  std::string w = Lower(word);
  if (auto irregular = morph.IrregularLemma(w)) return *irregular;
  if (w.size() > 3 && EndsWith(w, "ies")) {
    return w.substr(0, w.size() - 3) + "y";
  }
  for (std::string_view suffix : {"sses", "shes", "ches", "xes", "zes"}) {
    if (w.size() > suffix.size() && EndsWith(w, suffix)) {
      return w.substr(0, w.size() - 2);
    }
  }
  if (w.size() > 1 && EndsWith(w, "s") && !EndsWith(w, "ss") &&
      !EndsWith(w, "us") && !EndsWith(w, "is")) {
    return w.substr(0, w.size() - 1);
  }
  return w;
}

std::string IndefArticle(std::string_view noun) {
  return !noun.empty() && IsVowel(noun.front()) ? "an" : "a";
}

std::string SplitIdentifier(std::string_view id) {
  std::string out;
  for (size_t i = 0; i < id.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(id[i]);
    if (c == '_') {
      if (!out.empty() && out.back() != ' ') out += ' ';
      continue;
    }
    if (std::isupper(c) && i > 0 &&
        (std::islower(static_cast<unsigned char>(id[i - 1])) ||
         std::isdigit(static_cast<unsigned char>(id[i - 1])))) {
      if (!out.empty() && out.back() != ' ') out += ' ';
    }
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

PhraseTemplate ParseEntry(std::string_view raw,
                          const NormalizedPredicate& predicate,
                          const MorphLexicon& morph) {
  std::vector<std::string> words = Words(raw);
  if (words.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "empty description for '" + predicate.name + "'");
  }
  bool slotted = std::any_of(words.begin(), words.end(), [](const auto& w) {
    return w.size() > 2 && w.front() == '[' && w.back() == ']';
  });
  if (!slotted) {
    std::string lemma = VerbLemma(words[0], morph);
    std::optional<std::string> prep;
    for (size_t i = 1; i < words.size(); ++i) {
      prep = prep ? *prep + " " + words[i] : words[i];
    }
    return PhraseTemplate::Verb(std::move(lemma), std::move(prep));
  }

  PhraseTemplate t;
  t.kind = PhraseTemplate::Kind::kSlotTemplate;
  std::vector<std::string> slot_classes;
  for (const auto& w : words) {
    if (w.size() > 2 && w.front() == '[' && w.back() == ']') {
      std::string cls = w.substr(1, w.size() - 2);
      slot_classes.push_back(cls);
      t.parts.push_back({true, cls});
    } else {
      t.parts.push_back({false, w});
    }
  }
  std::vector<std::string> expected = predicate.arg_classes;
  std::sort(slot_classes.begin(), slot_classes.end());
  std::sort(expected.begin(), expected.end());
  if (slot_classes != expected) {
    std::string msg = "description of '" + predicate.name +
                      "' has slots that do not match its argument classes (";
    for (size_t i = 0; i < predicate.arg_classes.size(); ++i) {
      if (i > 0) msg += ", ";
      msg += predicate.arg_classes[i];
    }
    msg += ")";
    throw Error(ErrorCode::kDiagnostics, msg,
                {{DiagCode::kSlotClassMismatch, predicate.span, msg, {}}});
  }
  return t;
}

Lexicon Lexicon::Build(const NormalizedProgram& program, MorphLexicon morph,
                       std::vector<Diagnostic>* diagnostics) {
  Lexicon lex;
  lex.morph_ = std::move(morph);
  for (const auto& entry : program.lexicon) {
    if (program.FindClass(entry.key) != nullptr) {
      lex.class_nouns_[entry.key] = Lower(Trim(entry.surface));
      continue;
    }
    const NormalizedPredicate* pred = program.FindPredicate(entry.key);
    if (pred == nullptr) continue;
    try {
      lex.entries_[entry.key] = ParseEntry(entry.surface, *pred, lex.morph_);
    } catch (const Error& err) {
      if (diagnostics == nullptr) continue;
      for (auto d : err.diagnostics()) {
        d.span = entry.span;
        diagnostics->push_back(std::move(d));
      }
      if (err.diagnostics().empty()) {
        diagnostics->push_back(
            {DiagCode::kSyntaxError, entry.span, err.what(), {}});
      }
    }
  }
  return lex;
}

PhraseTemplate Lexicon::TemplateFor(const NormalizedPredicate& predicate) const {
  if (auto it = entries_.find(predicate.name); it != entries_.end()) {
    return it->second;
  }
  if (predicate.origin == PredicateOrigin::kMembership) {
    return PhraseTemplate::Noun(NounFor(predicate.owner),
                                IsAnimate(predicate.owner));
  }
  return ParseEntry(SplitIdentifier(predicate.name), predicate, morph_);
}

bool Lexicon::HasEntry(std::string_view key) const {
  return entries_.count(key) > 0 || class_nouns_.count(key) > 0;
}

std::string Lexicon::NounFor(std::string_view class_name) const {
  if (auto it = class_nouns_.find(class_name); it != class_nouns_.end()) {
    return it->second;
  }
  return SplitIdentifier(class_name);
}

bool Lexicon::IsAnimate(std::string_view class_name) const {
  return morph_.IsAnimate(NounFor(class_name));
}

}  // namespace l4
