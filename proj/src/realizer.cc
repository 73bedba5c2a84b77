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

#include "l4/realizer.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "l4/diagnostic.h"

namespace l4 {
namespace {

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string JoinWords(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (w.empty()) continue;
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::string Capitalize(std::string s) {
  if (!s.empty()) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

// "a", "a and b", "a, b and c".
std::string ListJoin(const std::vector<std::string>& items,
                     std::string_view conj) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      out += i + 1 == items.size() ? " " + std::string(conj) + " " : ", ";
    }
    out += items[i];
  }
  return out;
}

// "a", "a, and b", "a, b, and c".
std::string SerialJoin(const std::vector<std::string>& items,
                       std::string_view conj) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      out += i + 1 == items.size() ? ", " + std::string(conj) + " " : ", ";
    }
    out += items[i];
  }
  return out;
}

// Line endings for a list whose last item closes the sentence.
std::string ItemSuffix(size_t i, size_t n, std::string_view conj) {
  if (i + 1 == n) return ".";
  if (i + 2 == n) return ", " + std::string(conj);
  return ",";
}

void SetPositions(Frame* f, size_t arity) {
  for (size_t i = 0; i < arity; ++i) {
    if (i == f->subject) continue;
    if (!f->object) {
      f->object = i;
    } else {
      f->extra.push_back(i);
    }
  }
}

void SetComplement(const std::vector<std::string>& words, Frame* f) {
  if (words.size() >= 2 && (words[0] == "a" || words[0] == "an")) {
    f->noun = words[1];
    f->particles = JoinWords({words.begin() + 2, words.end()});
  } else {
    f->adjective = JoinWords(words);
  }
}

Frame LiteralFrame(const PhraseTemplate& phrase,
                   std::vector<size_t> slot_args) {
  Frame f;
  f.kind = Frame::Kind::kLiteral;
  f.parts = phrase.parts;
  f.slot_args = std::move(slot_args);
  f.subject = f.slot_args.empty() ? 0 : f.slot_args.front();
  return f;
}

std::string Article(const std::string& noun) {
  return IndefArticle(noun) + " " + noun;
}

}  // namespace

int Frame::Rank() const {
  switch (kind) {
    case Kind::kCopula:
      return transitive() ? 1 : 0;
    case Kind::kVerb:
      return transitive() ? 3 : 2;
    case Kind::kLiteral:
      return 4;
  }
  return 4;
}

Frame MakeFrame(const NormalizedPredicate& predicate,
                const PhraseTemplate& phrase, const MorphLexicon& morph) {
  Frame f;
  const size_t n = predicate.arity();
  switch (phrase.kind) {
    case PhraseTemplate::Kind::kNounPhrase:
      f.kind = Frame::Kind::kCopula;
      f.noun = phrase.lemma;
      SetPositions(&f, n);
      return f;
    case PhraseTemplate::Kind::kVerbPhrase:
      if (phrase.lemma == "be") {
        f.kind = Frame::Kind::kCopula;
        SetComplement(Words(phrase.preposition.value_or("")), &f);
      } else {
        f.kind = Frame::Kind::kVerb;
        f.lemma = phrase.lemma;
        f.particles = phrase.preposition.value_or("");
      }
      SetPositions(&f, n);
      return f;
    case PhraseTemplate::Kind::kSlotTemplate:
      break;
  }

  std::vector<size_t> slot_args;
  std::vector<bool> used(n, false);
  for (const auto& part : phrase.parts) {
    if (!part.is_slot) continue;
    size_t pos = n;
    for (size_t i = 0; i < n; ++i) {
      if (!used[i] && predicate.arg_classes[i] == part.text) {
        pos = i;
        break;
      }
    }
    if (pos == n) {
      return MakeFrame(predicate,
                       PhraseTemplate::Verb(SplitIdentifier(predicate.name)),
                       morph);
    }
    used[pos] = true;
    slot_args.push_back(pos);
  }

  const auto& parts = phrase.parts;
  if (parts.size() < 2 || !parts[0].is_slot || parts[1].is_slot) {
    return LiteralFrame(phrase, slot_args);
  }
  size_t i = 2;
  std::vector<std::string> middle;
  while (i < parts.size() && !parts[i].is_slot) middle.push_back(parts[i++].text);
  std::optional<size_t> object;
  std::vector<std::string> trailing;
  if (i < parts.size()) {
    object = slot_args[1];
    ++i;
    while (i < parts.size() && !parts[i].is_slot) {
      trailing.push_back(parts[i++].text);
    }
    if (i < parts.size()) return LiteralFrame(phrase, slot_args);
  }

  f.subject = slot_args[0];
  f.object = object;
  std::string lemma = VerbLemma(parts[1].text, morph);
  if (lemma == "be") {
    f.kind = Frame::Kind::kCopula;
    SetComplement(middle, &f);
  } else {
    f.kind = Frame::Kind::kVerb;
    f.lemma = lemma;
    f.particles = JoinWords(middle);
  }
  f.trailing = JoinWords(trailing);
  return f;
}

// ---- Context ---------------------------------------------------------------

const NormalizedPredicate* RealizerContext::PredicateOf(
    std::string_view predicate) const {
  if (compiled == nullptr) return nullptr;
  return compiled->symbols.Predicate(predicate);
}

Frame RealizerContext::FrameOf(std::string_view predicate) const {
  const MorphLexicon& morph =
      lexicon != nullptr ? lexicon->morph() : DefaultMorphology();
  if (const NormalizedPredicate* p = PredicateOf(predicate)) {
    PhraseTemplate t = lexicon != nullptr ? lexicon->TemplateFor(*p)
                                          : Lexicon().TemplateFor(*p);
    return MakeFrame(*p, t, morph);
  }
  Frame f;
  f.kind = Frame::Kind::kVerb;
  f.lemma = SplitIdentifier(predicate);
  f.object = 1;
  return f;
}

std::string RealizerContext::Display(std::string_view constant) const {
  if (auto it = names.find(std::string(constant)); it != names.end()) {
    return it->second;
  }
  if (compiled != nullptr) {
    if (auto src = compiled->symbols.SourceConstant(constant)) {
      return SplitIdentifier(*src);
    }
  }
  std::string out(constant);
  std::replace(out.begin(), out.end(), '_', ' ');
  return Capitalize(out);
}

std::string RealizerContext::Noun(std::string_view class_name) const {
  return lexicon != nullptr ? lexicon->NounFor(class_name)
                            : SplitIdentifier(class_name);
}

bool RealizerContext::Animate(std::string_view class_name) const {
  return lexicon != nullptr ? lexicon->IsAnimate(class_name)
                            : DefaultMorphology().IsAnimate(
                                  SplitIdentifier(class_name));
}

bool RealizerContext::IsEnumeratedConstant(std::string_view constant) const {
  return compiled != nullptr &&
         compiled->symbols.ClassOfConstant(constant).has_value();
}

namespace {

const MorphLexicon& MorphOf(const RealizerContext& ctx) {
  return ctx.lexicon != nullptr ? ctx.lexicon->morph() : DefaultMorphology();
}

std::string Complement(const Frame& f, Number number,
                       const MorphLexicon& morph) {
  if (f.noun.empty()) return f.adjective;
  return number == Number::kPlural ? morph.Plural(f.noun) : Article(f.noun);
}

// Words after the verb, or after the copula's complement: particles, then
// object and extra arguments present in `args`, then trailing words.
std::string Tail(const Frame& f, const std::map<size_t, std::string>& args) {
  std::vector<std::string> words{f.particles};
  if (f.object) {
    if (auto it = args.find(*f.object); it != args.end()) {
      words.push_back(it->second);
    }
  }
  for (size_t e : f.extra) {
    if (auto it = args.find(e); it != args.end()) words.push_back(it->second);
  }
  words.push_back(f.trailing);
  return JoinWords(words);
}

std::string LiteralText(const Frame& f,
                        const std::map<size_t, std::string>& args) {
  std::vector<std::string> words;
  size_t slot = 0;
  for (const auto& part : f.parts) {
    if (!part.is_slot) {
      words.push_back(part.text);
      continue;
    }
    size_t pos = f.slot_args[slot++];
    auto it = args.find(pos);
    words.push_back(it != args.end() ? it->second : part.text);
  }
  return JoinWords(words);
}

std::string PredicateText(const Frame& f, Number number,
                          const std::map<size_t, std::string>& args,
                          bool omit_copula, const MorphLexicon& morph) {
  switch (f.kind) {
    case Frame::Kind::kVerb:
      return JoinWords({InflectVerb(f.lemma, number, morph), Tail(f, args)});
    case Frame::Kind::kCopula:
      return JoinWords({omit_copula ? "" : InflectVerb("be", number, morph),
                        Complement(f, number, morph), Tail(f, args)});
    case Frame::Kind::kLiteral:
      return LiteralText(f, args);
  }
  return {};
}

std::map<size_t, std::string> DisplayArgs(const GroundAtom& atom,
                                          const RealizerContext& ctx) {
  std::map<size_t, std::string> out;
  for (size_t i = 0; i < atom.args.size(); ++i) {
    if (!atom.args[i].empty()) out[i] = ctx.Display(atom.args[i]);
  }
  return out;
}

}  // namespace

// ---- Questions -------------------------------------------------------------

namespace {

NounPhrase ClassNP(const std::string& class_name, const RealizerContext& ctx,
                   InfoState* info) {
  NounPhrase np{ctx.Noun(class_name), info->Mentioned(class_name)
                                          ? Definiteness::kDefinite
                                          : Definiteness::kIndefinite};
  info->Mention(class_name);
  return np;
}

NounPhrase ArgNP(const Question& q, const NormalizedPredicate& pred,
                 size_t pos, const RealizerContext& ctx, InfoState* info) {
  const std::string& cls = pred.arg_classes[pos];
  if (q.expansion && q.expansion->bind_arg == pos) {
    if (ctx.singleton_classes.count(cls) > 0) return ClassNP(cls, ctx, info);
    return {"{" + cls + "}", Definiteness::kProper};
  }
  if (auto it = q.fixed_args.find(pos); it != q.fixed_args.end()) {
    info->Mention(it->second);
    return {ctx.Display(it->second), Definiteness::kProper};
  }
  return ClassNP(cls, ctx, info);
}

std::string NPText(const NounPhrase& np) {
  switch (np.definiteness) {
    case Definiteness::kProper:
      return np.text;
    case Definiteness::kDefinite:
      return "the " + np.text;
    case Definiteness::kIndefinite:
      return Article(np.text);
  }
  return np.text;
}

std::map<size_t, std::string> NPTexts(const QuestionVP& vp) {
  std::map<size_t, std::string> out;
  for (const auto& [pos, np] : vp.args) out[pos] = NPText(np);
  return out;
}

std::string SubjectText(const QuestionVP& vp) {
  auto it = vp.args.find(vp.frame.subject);
  return it != vp.args.end() ? NPText(it->second) : "";
}

std::string Finish(std::string s) { return Capitalize(std::move(s)) + "?"; }

}  // namespace

QuestionTree BuildQuestion(const Question& q, const RealizerContext& ctx,
                           InfoState* info) {
  InfoState scratch;
  if (info == nullptr) info = &scratch;
  if (q.kind == QuestionKind::kExistence) {
    info->Mention(q.class_name);
    return ExistQ{ctx.Noun(q.class_name), q.plural};
  }
  const NormalizedPredicate* pred = ctx.PredicateOf(q.predicate);
  if (pred == nullptr) {
    throw Error(ErrorCode::kUnknownPredicate,
                "unknown predicate '" + q.predicate + "'");
  }
  if (q.asked_arg >= pred->arity()) {
    throw Error(ErrorCode::kInvalidArgument,
                "asked argument out of range for '" + q.predicate + "'");
  }
  QuestionVP vp{ctx.FrameOf(q.predicate), {}};
  const bool polar = q.kind == QuestionKind::kPolar;
  for (size_t pos = 0; pos < pred->arity(); ++pos) {
    if (!polar && pos == q.asked_arg) continue;
    vp.args[pos] = ArgNP(q, *pred, pos, ctx, info);
  }
  if (polar) return PolarQ{std::move(vp)};

  const std::string& asked_class = pred->arg_classes[q.asked_arg];
  if (vp.frame.kind != Frame::Kind::kLiteral &&
      q.asked_arg == vp.frame.subject) {
    if (ctx.Animate(asked_class)) return WhoQ{std::move(vp)};
    return WhichQ{ctx.Noun(asked_class), q.kind == QuestionKind::kWhOpen,
                  std::move(vp)};
  }
  return WhichSlashQ{ctx.Noun(asked_class), ctx.Animate(asked_class),
                     std::move(vp)};
}

std::string Linearize(const QuestionTree& tree, const RealizerContext& ctx) {
  const MorphLexicon& morph = MorphOf(ctx);
  const Number sg = Number::kSingular;
  if (const auto* e = std::get_if<ExistQ>(&tree)) {
    if (e->plural) return "Are there any " + morph.Plural(e->noun) + "?";
    return "Is there " + Article(e->noun) + "?";
  }
  if (const auto* p = std::get_if<PolarQ>(&tree)) {
    const Frame& f = p->vp.frame;
    auto args = NPTexts(p->vp);
    switch (f.kind) {
      case Frame::Kind::kVerb:
        return Finish(JoinWords(
            {"does", SubjectText(p->vp), f.lemma, Tail(f, args)}));
      case Frame::Kind::kCopula:
        return Finish(JoinWords({"is", SubjectText(p->vp),
                                 Complement(f, sg, morph), Tail(f, args)}));
      case Frame::Kind::kLiteral:
        return Finish("is it the case that " + LiteralText(f, args));
    }
  }
  if (const auto* w = std::get_if<WhoQ>(&tree)) {
    return Finish(JoinWords(
        {"who", PredicateText(w->vp.frame, sg, NPTexts(w->vp), false, morph)}));
  }
  if (const auto* w = std::get_if<WhichQ>(&tree)) {
    const Frame& f = w->vp.frame;
    Number number = w->plural ? Number::kPlural : sg;
    std::string head =
        w->plural ? morph.Plural(w->noun) : std::string(w->noun);
    if (f.kind == Frame::Kind::kCopula && !f.transitive() && f.noun == w->noun) {
      return Finish("which " + head + " " + InflectVerb("be", number, morph) +
                    " there");
    }
    return Finish(JoinWords(
        {"which", head, PredicateText(f, number, NPTexts(w->vp), false, morph)}));
  }
  const auto& w = std::get<WhichSlashQ>(tree);
  const Frame& f = w.vp.frame;
  auto args = NPTexts(w.vp);
  std::string wh = w.animate ? "who" : "which " + w.noun;
  switch (f.kind) {
    case Frame::Kind::kVerb:
      return Finish(
          JoinWords({wh, "does", SubjectText(w.vp), f.lemma, Tail(f, args)}));
    case Frame::Kind::kCopula:
      return Finish(JoinWords(
          {wh, "is", SubjectText(w.vp), Complement(f, sg, morph), Tail(f, args)}));
    case Frame::Kind::kLiteral:
      break;
  }
  // Echo question: the asked slot is filled by the wh-phrase in place.
  for (size_t pos : f.slot_args) {
    if (args.count(pos) == 0) args[pos] = wh;
  }
  return Finish(LiteralText(f, args));
}

std::string RealizeQuestion(const Question& question,
                            const RealizerContext& context, InfoState* info) {
  return Linearize(BuildQuestion(question, context, info), context);
}

std::string RealizeLoopPrompt(const Question& question,
                              const RealizerContext& context) {
  return "Are there more " +
         MorphOf(context).Plural(context.Noun(question.class_name)) + "?";
}

// ---- Declaratives ----------------------------------------------------------

std::vector<Declarative> Aggregate(const std::vector<GroundAtom>& atoms,
                                   const RealizerContext& ctx) {
  struct Unit {
    PredicatePhrase phrase;
    std::vector<std::string> subjects;
  };
  std::vector<Unit> units;
  std::set<GroundAtom> seen;
  for (const auto& atom : atoms) {
    if (!seen.insert(atom).second) continue;
    Frame frame = ctx.FrameOf(atom.predicate);
    if (frame.subject >= atom.args.size()) {
      units.push_back({{atom, frame}, {}});
      continue;
    }
    GroundAtom key = atom;
    std::string subject = key.args[frame.subject];
    key.args[frame.subject].clear();
    // Choices among enumerated constants stay one clause per subject.
    bool coordinable =
        frame.kind != Frame::Kind::kLiteral &&
        std::none_of(key.args.begin(), key.args.end(), [&](const auto& a) {
          return !a.empty() && ctx.IsEnumeratedConstant(a);
        });
    auto it = !coordinable ? units.end()
                           : std::find_if(units.begin(), units.end(),
                                          [&](const Unit& u) {
                                            return u.phrase.atom == key &&
                                                   !u.subjects.empty();
                                          });
    if (it == units.end()) {
      units.push_back({{key, frame}, {subject}});
    } else {
      it->subjects.push_back(subject);
    }
  }

  std::vector<Declarative> decls;
  for (auto& u : units) {
    bool literal = u.phrase.frame.kind == Frame::Kind::kLiteral;
    auto it = literal || u.subjects.empty()
                  ? decls.end()
                  : std::find_if(decls.begin(), decls.end(),
                                 [&](const Declarative& d) {
                                   return d.subjects == u.subjects &&
                                          d.predicates.front().frame.kind !=
                                              Frame::Kind::kLiteral;
                                 });
    if (it == decls.end()) {
      decls.push_back({u.subjects, {u.phrase}});
    } else {
      it->predicates.push_back(u.phrase);
    }
  }
  for (auto& d : decls) {
    std::stable_sort(d.predicates.begin(), d.predicates.end(),
                     [](const PredicatePhrase& a, const PredicatePhrase& b) {
                       return a.frame.Rank() < b.frame.Rank();
                     });
  }
  return decls;
}

std::vector<GroundAtom> Deaggregate(const std::vector<Declarative>& decls) {
  std::vector<GroundAtom> out;
  for (const auto& d : decls) {
    for (const auto& p : d.predicates) {
      if (d.subjects.empty()) {
        out.push_back(p.atom);
        continue;
      }
      for (const auto& s : d.subjects) {
        GroundAtom a = p.atom;
        a.args[p.frame.subject] = s;
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

std::string RealizeDeclarative(const Declarative& decl,
                               const RealizerContext& ctx) {
  const MorphLexicon& morph = MorphOf(ctx);
  if (decl.subjects.empty()) {
    return SplitIdentifier(decl.predicates.front().atom.predicate);
  }
  const Frame& first = decl.predicates.front().frame;
  if (first.kind == Frame::Kind::kLiteral) {
    GroundAtom a = decl.predicates.front().atom;
    a.args[first.subject] = decl.subjects.front();
    return LiteralText(first, DisplayArgs(a, ctx));
  }
  std::vector<std::string> subjects;
  for (const auto& s : decl.subjects) subjects.push_back(ctx.Display(s));
  Number number =
      decl.subjects.size() > 1 ? Number::kPlural : Number::kSingular;
  std::vector<std::string> vps;
  for (size_t i = 0; i < decl.predicates.size(); ++i) {
    const auto& p = decl.predicates[i];
    bool omit = i > 0 && p.frame.kind == Frame::Kind::kCopula &&
                decl.predicates[i - 1].frame.kind == Frame::Kind::kCopula;
    vps.push_back(
        PredicateText(p.frame, number, DisplayArgs(p.atom, ctx), omit, morph));
  }
  return ListJoin(subjects, "and") + " " + ListJoin(vps, "and");
}

// ---- Answers ---------------------------------------------------------------

namespace {

// Declaratives sharing a predicate list form one group.
std::vector<std::string> GroupTexts(const std::vector<GroundAtom>& atoms,
                                    const RealizerContext& ctx) {
  std::vector<std::vector<std::string>> keys;
  std::vector<std::vector<std::string>> texts;
  std::vector<Declarative> decls = Aggregate(atoms, ctx);
  std::stable_sort(decls.begin(), decls.end(),
                   [](const Declarative& a, const Declarative& b) {
                     return a.subjects.size() < b.subjects.size();
                   });
  for (const auto& d : decls) {
    std::vector<std::string> key;
    for (const auto& p : d.predicates) key.push_back(p.atom.predicate);
    auto it = std::find(keys.begin(), keys.end(), key);
    size_t idx = static_cast<size_t>(it - keys.begin());
    if (it == keys.end()) {
      keys.push_back(key);
      texts.emplace_back();
    }
    texts[idx].push_back(RealizeDeclarative(d, ctx));
  }
  std::vector<std::string> out;
  for (const auto& t : texts) out.push_back(ListJoin(t, "and"));
  return out;
}

// Atoms that mention an enumerated constant. Membership atoms and
// relations between introduced individuals are excluded.
bool Discriminating(const GroundAtom& atom, const RealizerContext& ctx) {
  const NormalizedPredicate* pred = ctx.PredicateOf(atom.predicate);
  if (pred == nullptr) return true;
  if (pred->origin == PredicateOrigin::kMembership) return false;
  for (const auto& cls : pred->arg_classes) {
    const ClassInfo* info = ctx.compiled->program.FindClass(cls);
    if (info != nullptr && info->is_enumerated) return true;
  }
  return false;
}

std::string ConclusionText(const GroundAtom& conclusion,
                           const RealizerContext& ctx) {
  auto decls = Aggregate({conclusion}, ctx);
  return Capitalize(RealizeDeclarative(decls.front(), ctx));
}

std::map<GroundAtom, size_t> FactPositions(const RealizerContext& ctx) {
  std::map<GroundAtom, size_t> out;
  if (ctx.compiled == nullptr) return out;
  size_t i = 0;
  for (const auto& c : ctx.compiled->clauses) {
    if (c.IsFact()) out.emplace(c.head.ToGround(), i++);
  }
  return out;
}

RealizedText Because(const GroundAtom& conclusion,
                     const std::vector<GroundAtom>& support,
                     const RealizerContext& ctx) {
  std::string head = ConclusionText(conclusion, ctx);
  std::vector<GroundAtom> reasons;
  for (const auto& a : support) {
    if (a != conclusion && Discriminating(a, ctx)) reasons.push_back(a);
  }
  if (reasons.empty()) {
    for (const auto& a : support) {
      if (a != conclusion) reasons.push_back(a);
    }
  }
  if (reasons.empty()) {
    return {head + ".", "<p>" + HtmlEscape(head) + ".</p>"};
  }
  auto groups = GroupTexts(reasons, ctx);
  RealizedText out;
  out.text = head + ", because";
  out.html = "<p>" + HtmlEscape(head) + ", because</p>\n<ul>\n";
  for (size_t i = 0; i < groups.size(); ++i) {
    std::string line = groups[i] + ItemSuffix(i, groups.size(), "and");
    out.text += "\n- " + line;
    out.html += "<li>" + HtmlEscape(line) + "</li>\n";
  }
  out.html += "</ul>";
  return out;
}

}  // namespace

RealizedText RealizeAnswer(const GroundAtom& conclusion,
                           const std::vector<AnswerSet>& answer_sets,
                           const RealizerContext& ctx) {
  if (answer_sets.empty()) {
    throw Error(ErrorCode::kEmptyAnswer, "no answer sets to realize");
  }
  std::vector<std::vector<GroundAtom>> supports;
  std::set<std::set<GroundAtom>> distinct;
  for (const auto& s : answer_sets) {
    if (s.conclusion != conclusion) {
      throw Error(ErrorCode::kInvalidArgument,
                  "answer set for " + ToString(s.conclusion) +
                      " passed with conclusion " + ToString(conclusion));
    }
    if (distinct.insert({s.support.begin(), s.support.end()}).second) {
      supports.push_back(s.support);
    }
  }
  if (supports.size() == 1) return Because(conclusion, supports[0], ctx);

  std::vector<GroundAtom> common;
  for (const auto& a : supports[0]) {
    bool everywhere = std::all_of(
        supports.begin() + 1, supports.end(), [&](const auto& s) {
          return std::find(s.begin(), s.end(), a) != s.end();
        });
    if (everywhere && std::find(common.begin(), common.end(), a) == common.end()) {
      common.push_back(a);
    }
  }
  const auto positions = FactPositions(ctx);
  const size_t none = positions.size();
  auto position = [&](const GroundAtom& a) {
    auto it = positions.find(a);
    return it == positions.end() ? none : it->second;
  };
  struct Alternative {
    std::vector<GroundAtom> atoms;
    size_t key = 0;
  };
  std::vector<Alternative> alternatives;
  for (const auto& s : supports) {
    Alternative alt;
    for (const auto& a : s) {
      if (std::find(common.begin(), common.end(), a) == common.end() &&
          std::find(alt.atoms.begin(), alt.atoms.end(), a) == alt.atoms.end()) {
        alt.atoms.push_back(a);
      }
    }
    if (alt.atoms.empty()) return Because(conclusion, s, ctx);
    std::stable_sort(alt.atoms.begin(), alt.atoms.end(),
                     [&](const GroundAtom& x, const GroundAtom& y) {
                       return position(x) < position(y);
                     });
    alt.key = position(alt.atoms.front());
    alternatives.push_back(std::move(alt));
  }
  std::stable_sort(alternatives.begin(), alternatives.end(),
                   [](const Alternative& x, const Alternative& y) {
                     return x.key < y.key;
                   });

  std::string head = ConclusionText(conclusion, ctx);
  RealizedText out;
  if (common.empty()) {
    out.text = head + ", if one of the following holds:";
    out.html = "<p>" + HtmlEscape(head) + ", if one of the following holds:</p>";
  } else {
    std::string shared = SerialJoin(GroupTexts(common, ctx), "and");
    out.text = head + ", if all of the following hold:\n" + shared +
               "\nand one of the following holds:";
    out.html = "<p>" + HtmlEscape(head) +
               ", if all of the following hold:</p>\n<ul>\n<li>" +
               HtmlEscape(shared) +
               "</li>\n</ul>\n<p>and one of the following holds:</p>";
  }
  out.html += "\n<ul>\n";
  for (size_t i = 0; i < alternatives.size(); ++i) {
    std::string line;
    auto groups = GroupTexts(alternatives[i].atoms, ctx);
    for (size_t g = 0; g < groups.size(); ++g) {
      line += (g > 0 ? ", " : "") + groups[g];
    }
    line += ItemSuffix(i, alternatives.size(), "or");
    out.text += "\n" + line;
    out.html += "<li>" + HtmlEscape(line) + "</li>\n";
  }
  out.html += "</ul>";
  return out;
}

RealizedText RealizeAnswers(const std::vector<AnswerSet>& answer_sets,
                            const RealizerContext& ctx) {
  if (answer_sets.empty()) {
    throw Error(ErrorCode::kEmptyAnswer, "no answer sets to realize");
  }
  std::map<GroundAtom, std::vector<AnswerSet>> by_conclusion;
  for (const auto& s : answer_sets) by_conclusion[s.conclusion].push_back(s);
  RealizedText out;
  for (const auto& [conclusion, sets] : by_conclusion) {
    RealizedText one = RealizeAnswer(conclusion, sets, ctx);
    bool first = out.text.empty();
    out.text += (first ? "" : "\n\n") + one.text;
    out.html += (first ? "" : "\n") + one.html;
  }
  return out;
}

RealizedText RealizeNoAnswer(const QuerySpec& goal, const FactBase& facts,
                             const RealizerContext& ctx) {
  const NormalizedPredicate* pred = ctx.PredicateOf(goal.predicate);
  if (pred == nullptr) {
    throw Error(ErrorCode::kUnknownPredicate,
                "unknown predicate '" + goal.predicate + "'");
  }
  const MorphLexicon& morph = MorphOf(ctx);
  auto members = [&](const std::string& cls) {
    std::vector<std::string> out;
    std::string mp = ctx.compiled->symbols.MembershipPredicate(cls);
    for (const auto& a : facts.atoms) {
      if (a.predicate == mp && a.args.size() == 1) out.push_back(a.args[0]);
    }
    return out;
  };

  for (size_t pos = 0; pos < pred->arity(); ++pos) {
    if (goal.bound.count(pos) > 0) continue;
    const std::string& cls = pred->arg_classes[pos];
    const ClassInfo* info = ctx.compiled->program.FindClass(cls);
    if (info != nullptr && !info->is_enumerated && members(cls).empty()) {
      std::string s = "No " + ctx.Noun(cls) + " exists.";
      return {s, "<p>" + HtmlEscape(s) + "</p>"};
    }
  }

  Frame f = ctx.FrameOf(goal.predicate);
  std::map<size_t, std::string> args;
  for (size_t pos = 0; pos < pred->arity(); ++pos) {
    if (auto it = goal.bound.find(pos); it != goal.bound.end()) {
      args[pos] = ctx.Display(it->second);
      continue;
    }
    const std::string& cls = pred->arg_classes[pos];
    auto m = members(cls);
    const ClassInfo* info = ctx.compiled->program.FindClass(cls);
    if (m.size() == 1) {
      args[pos] = ctx.Display(m[0]);
    } else if (info != nullptr && info->is_enumerated) {
      args[pos] = "any " + ctx.Noun(cls);
    } else {
      args[pos] = Article(ctx.Noun(cls));
    }
  }
  std::string sentence;
  const bool subject_free =
      f.kind != Frame::Kind::kLiteral && goal.bound.count(f.subject) == 0;
  if (f.kind == Frame::Kind::kLiteral) {
    sentence = "it does not follow that " + LiteralText(f, args);
  } else if (subject_free) {
    const std::string& cls = pred->arg_classes[f.subject];
    std::string who = ctx.Animate(cls) ? "nobody" : "no " + ctx.Noun(cls);
    sentence = who + " " +
               PredicateText(f, Number::kSingular, args, false, morph);
  } else if (f.kind == Frame::Kind::kVerb) {
    sentence = JoinWords({args[f.subject], "does not", f.lemma, Tail(f, args)});
  } else {
    sentence = JoinWords({args[f.subject], "is not",
                          Complement(f, Number::kSingular, morph),
                          Tail(f, args)});
  }
  RealizedText out;
  out.text = Capitalize(sentence) + ".";
  out.html = "<p>" + HtmlEscape(out.text) + "</p>";

  // Distinct variables per class in the goal's rules. A relation between
  // introduced individuals is echoed when it mentions fewer individuals of
  // some class than a rule needs.
  std::map<std::string, size_t> needed;
  for (const auto& c : ctx.compiled->clauses) {
    if (c.head.predicate != goal.predicate || c.body.empty()) continue;
    std::map<std::string, std::set<std::string>> vars;
    for (const auto& b : c.body) {
      const NormalizedPredicate* p = ctx.PredicateOf(b.predicate);
      if (p == nullptr || p->origin != PredicateOrigin::kMembership) continue;
      if (b.args.size() == 1 && b.args[0].is_var()) {
        vars[p->owner].insert(b.args[0].name);
      }
    }
    for (const auto& [cls, v] : vars) {
      needed[cls] = std::max(needed[cls], v.size());
    }
  }
  std::map<std::string, std::vector<std::set<std::string>>> seen;
  for (const auto& a : facts.atoms) {
    auto& cols = seen[a.predicate];
    cols.resize(std::max(cols.size(), a.args.size()));
    for (size_t i = 0; i < a.args.size(); ++i) cols[i].insert(a.args[i]);
  }
  auto short_of = [&](const GroundAtom& a, const NormalizedPredicate& p) {
    const auto& cols = seen[a.predicate];
    for (size_t i = 0; i < p.arity() && i < cols.size(); ++i) {
      auto it = needed.find(p.arg_classes[i]);
      if (it != needed.end() && cols[i].size() < it->second) return true;
    }
    return false;
  };

  std::vector<GroundAtom> relevant, given;
  for (const auto& a : facts.atoms) {
    const NormalizedPredicate* p = ctx.PredicateOf(a.predicate);
    if (p != nullptr && p->origin == PredicateOrigin::kMembership) continue;
    given.push_back(a);
    if (Discriminating(a, ctx) || (p != nullptr && short_of(a, *p))) {
      relevant.push_back(a);
    }
  }
  if (relevant.empty()) relevant = given;
  if (!relevant.empty()) {
    std::string echo =
        Capitalize(SerialJoin(GroupTexts(relevant, ctx), "and")) + ".";
    out.text += " " + echo;
    out.html += "\n<p>" + HtmlEscape(echo) + "</p>";
  }
  return out;
}

std::string HtmlEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace l4
