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

#include "l4/sem.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace l4 {
namespace {

void Diag(std::vector<Diagnostic>* out, DiagCode code, const Span& span,
          std::string message) {
  out->push_back({code, span, std::move(message), {}});
}

// Flattens a Bool-final arrow into its argument types. Returns nullopt for
// anything that is not a first-order predicate signature.
std::optional<std::vector<std::string>> PredicateArgs(const TypeExpr& type) {
  std::vector<std::string> args;
  const TypeExpr* t = &type;
  while (t->kind == TypeExpr::Kind::kArrow) {
    if (t->argument().kind != TypeExpr::Kind::kClassRef) return std::nullopt;
    args.push_back(t->argument().name);
    t = &t->result();
  }
  if (t->kind != TypeExpr::Kind::kBool) return std::nullopt;
  return args;
}

TypeExpr ArrowOf(const std::vector<std::string>& classes, size_t from) {
  TypeExpr result = TypeExpr::Bool();
  for (size_t i = classes.size(); i > from; --i) {
    result = TypeExpr::Arrow(TypeExpr::ClassRef(classes[i - 1]),
                             std::move(result));
  }
  return result;
}

bool IsFactRule(const RuleDecl& r) {
  if (!r.binders.empty() || r.condition) return false;
  return std::all_of(r.conclusion.children.begin(), r.conclusion.children.end(),
                     [](const Expr& a) { return a.kind == Expr::Kind::kConst; });
}

void Flatten(const Expr& e, std::vector<const Expr*>* out) {
  switch (e.kind) {
    case Expr::Kind::kApply:
      out->push_back(&e);
      break;
    case Expr::Kind::kConj:
      Flatten(e.children[0], out);
      Flatten(e.children[1], out);
      break;
    case Expr::Kind::kExists:
      Flatten(e.children[0], out);
      break;
    default:
      break;
  }
}

class Checker {
 public:
  explicit Checker(const NormalizedProgram& p) : p_(p) {}

  std::vector<Diagnostic> Run() {
    for (const auto& fact : p_.facts) CheckFact(fact);
    for (const auto& rule : p_.rules) CheckRule(rule);
    return std::move(diags_);
  }

 private:
  void CheckFact(const GroundAtom& fact) {
    const NormalizedPredicate* pred = p_.FindPredicate(fact.predicate);
    if (pred == nullptr) {
      Diag(&diags_, DiagCode::kUnknownPredicate, {},
           "unknown predicate '" + fact.predicate + "'");
      return;
    }
    if (pred->arity() != fact.args.size()) {
      Diag(&diags_, DiagCode::kArityMismatch, {},
           "'" + fact.predicate + "' expects " +
               std::to_string(pred->arity()) + " arguments, got " +
               std::to_string(fact.args.size()));
      return;
    }
    for (size_t i = 0; i < fact.args.size(); ++i) {
      auto cls = p_.ClassOfConstant(fact.args[i]);
      if (!cls) {
        Diag(&diags_, DiagCode::kUnboundVariable, {},
             "unknown constant '" + fact.args[i] + "'");
      } else if (*cls != pred->arg_classes[i]) {
        Diag(&diags_, DiagCode::kClassMismatch, {},
             "argument " + std::to_string(i + 1) + " of '" + fact.predicate +
                 "': expected " + pred->arg_classes[i] + ", got " + *cls);
      }
    }
  }

  void CheckRule(const RuleDecl& rule) {
    scope_.clear();
    for (const auto& b : rule.binders) {
      if (p_.FindClass(b.class_name) == nullptr) {
        Diag(&diags_, DiagCode::kUnknownClass, b.span,
             "unknown class '" + b.class_name + "'");
      }
      if (Lookup(b.var)) {
        Diag(&diags_, DiagCode::kDuplicateVariable, b.span,
             "variable '" + b.var + "' bound twice");
      }
      scope_.emplace_back(b.var, b.class_name);
    }
    if (rule.condition) CheckExpr(*rule.condition);
    CheckApply(rule.conclusion);
  }

  const std::string* Lookup(const std::string& var) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == var) return &it->second;
    }
    return nullptr;
  }

  void CheckExpr(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kApply:
        CheckApply(e);
        break;
      case Expr::Kind::kConj:
        CheckExpr(e.children[0]);
        CheckExpr(e.children[1]);
        break;
      case Expr::Kind::kExists:
        if (p_.FindClass(e.class_name) == nullptr) {
          Diag(&diags_, DiagCode::kUnknownClass, e.span,
               "unknown class '" + e.class_name + "'");
        }
        if (Lookup(e.name)) {
          Diag(&diags_, DiagCode::kDuplicateVariable, e.span,
               "variable '" + e.name + "' bound twice");
        }
        scope_.emplace_back(e.name, e.class_name);
        CheckExpr(e.children[0]);
        scope_.pop_back();
        break;
      default:
        Diag(&diags_, DiagCode::kSyntaxError, e.span,
             "expected a predicate application");
        break;
    }
  }

  void CheckApply(const Expr& e) {
    const NormalizedPredicate* pred = p_.FindPredicate(e.name);
    if (pred == nullptr) {
      Diag(&diags_, DiagCode::kUnknownPredicate, e.span,
           "unknown predicate '" + e.name + "'");
      return;
    }
    if (pred->arity() != e.children.size()) {
      Diag(&diags_, DiagCode::kArityMismatch, e.span,
           "'" + e.name + "' expects " + std::to_string(pred->arity()) +
               " arguments, got " + std::to_string(e.children.size()));
      return;
    }
    for (size_t i = 0; i < e.children.size(); ++i) {
      const Expr& arg = e.children[i];
      std::optional<std::string> cls;
      if (arg.kind == Expr::Kind::kVar) {
        if (const std::string* c = Lookup(arg.name)) cls = *c;
      } else {
        cls = p_.ClassOfConstant(arg.name);
      }
      if (!cls) {
        Diag(&diags_, DiagCode::kUnboundVariable, arg.span,
             "unbound variable '" + arg.name + "'");
      } else if (*cls != pred->arg_classes[i]) {
        Diag(&diags_, DiagCode::kClassMismatch, arg.span,
             "argument " + std::to_string(i + 1) + " of '" + e.name +
                 "': expected " + pred->arg_classes[i] + ", got " + *cls);
      }
    }
  }

  const NormalizedProgram& p_;
  std::vector<std::pair<std::string, std::string>> scope_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::string ToString(const GroundAtom& atom) {
  std::string out = atom.predicate + "(";
  for (size_t i = 0; i < atom.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += atom.args[i];
  }
  return out + ")";
}

std::vector<const Expr*> FlattenAtoms(const Expr& expr) {
  std::vector<const Expr*> out;
  Flatten(expr, &out);
  return out;
}

std::string MembershipPredicateName(std::string_view class_name) {
  std::string out(class_name);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

const ClassInfo* NormalizedProgram::FindClass(std::string_view name) const {
  for (const auto& c : classes) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const NormalizedPredicate* NormalizedProgram::FindPredicate(
    std::string_view name) const {
  for (const auto& p : predicates) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const NormalizedPredicate* NormalizedProgram::MembershipOf(
    std::string_view class_name) const {
  for (const auto& p : predicates) {
    if (p.origin == PredicateOrigin::kMembership && p.owner == class_name) {
      return &p;
    }
  }
  return nullptr;
}

std::optional<std::string> NormalizedProgram::ClassOfConstant(
    std::string_view name) const {
  for (const auto& c : classes) {
    if (std::find(c.constants.begin(), c.constants.end(), name) !=
        c.constants.end()) {
      return c.name;
    }
  }
  return std::nullopt;
}

bool NormalizedProgram::HasDefiningRule(std::string_view predicate) const {
  return std::any_of(rules.begin(), rules.end(), [&](const RuleDecl& r) {
    return r.conclusion.name == predicate;
  });
}

bool NormalizedProgram::HasFacts(std::string_view predicate) const {
  return std::any_of(facts.begin(), facts.end(), [&](const GroundAtom& f) {
    return f.predicate == predicate;
  });
}

NormalizeResult Normalize(const SourceProgram& program) {
  NormalizeResult result;
  NormalizedProgram& out = result.program;
  auto* diags = &result.diagnostics;

  // Classes first so forward references from decls resolve.
  for (const Block& block : program.blocks) {
    const auto* b = std::get_if<ClassBlock>(&block);
    if (b == nullptr) continue;
    for (const auto& c : b->classes) {
      if (out.FindClass(c.name) != nullptr) {
        Diag(diags, DiagCode::kDuplicateClass, c.span,
             "class '" + c.name + "' declared twice");
        continue;
      }
      out.classes.push_back({c.name, {}, false, c.span});
    }
  }

  std::vector<NormalizedPredicate> fields;
  std::vector<NormalizedPredicate> standalone;
  auto check_classes = [&](const std::vector<std::string>& classes,
                           const Span& span) {
    bool ok = true;
    for (const auto& c : classes) {
      if (out.FindClass(c) == nullptr) {
        Diag(diags, DiagCode::kUnknownClass, span,
             "unknown class '" + c + "'");
        ok = false;
      }
    }
    return ok;
  };

  for (const Block& block : program.blocks) {
    if (const auto* b = std::get_if<ClassBlock>(&block)) {
      for (const auto& c : b->classes) {
        std::set<std::string> seen;
        for (const auto& f : c.fields) {
          if (!seen.insert(f.name).second) {
            Diag(diags, DiagCode::kDuplicateField, f.span,
                 "field '" + f.name + "' declared twice in class '" + c.name +
                     "'");
            continue;
          }
          auto args = PredicateArgs(f.type);
          if (!args) {
            Diag(diags, DiagCode::kUnsupportedType, f.span,
                 "field '" + f.name + "' must have a predicate type ending "
                 "in Bool");
            continue;
          }
          args->insert(args->begin(), c.name);
          if (!check_classes(*args, f.span)) continue;
          fields.push_back(
              {f.name, *args, PredicateOrigin::kField, c.name, f.span});
        }
      }
    } else if (const auto* b = std::get_if<DeclBlock>(&block)) {
      for (const auto& d : b->decls) {
        if (d.type.kind == TypeExpr::Kind::kClassRef) {
          ClassInfo* cls = nullptr;
          for (auto& c : out.classes) {
            if (c.name == d.type.name) cls = &c;
          }
          if (cls == nullptr) {
            Diag(diags, DiagCode::kUnknownClass, d.type.span,
                 "unknown class '" + d.type.name + "'");
          } else if (out.ClassOfConstant(d.name)) {
            Diag(diags, DiagCode::kDuplicateConstant, d.span,
                 "constant '" + d.name + "' declared twice");
          } else {
            cls->constants.push_back(d.name);
            cls->is_enumerated = true;
          }
          continue;
        }
        auto args = PredicateArgs(d.type);
        if (!args || args->empty()) {
          Diag(diags, DiagCode::kUnsupportedType, d.type.span,
               "'" + d.name + "' must be a class constant or a predicate "
               "with at least one argument");
          continue;
        }
        if (!check_classes(*args, d.type.span)) continue;
        standalone.push_back(
            {d.name, *args, PredicateOrigin::kStandalone, {}, d.span});
      }
    }
  }

  for (const auto& c : out.classes) {
    out.predicates.push_back({MembershipPredicateName(c.name),
                              {c.name},
                              PredicateOrigin::kMembership,
                              c.name,
                              c.span});
  }
  // Fields are ordered by owner class, then by field order.
  for (const auto& c : out.classes) {
    for (const auto& f : fields) {
      if (f.owner == c.name) out.predicates.push_back(f);
    }
  }
  for (const auto& s : standalone) out.predicates.push_back(s);

  std::vector<NormalizedPredicate> unique;
  for (auto& p : out.predicates) {
    bool dup = std::any_of(unique.begin(), unique.end(),
                           [&](const auto& u) { return u.name == p.name; });
    if (dup) {
      Diag(diags, DiagCode::kDuplicatePredicate, p.span,
           "predicate '" + p.name + "' declared twice");
      continue;
    }
    unique.push_back(std::move(p));
  }
  out.predicates = std::move(unique);

  for (const Block& block : program.blocks) {
    if (const auto* b = std::get_if<RuleBlock>(&block)) {
      if (IsFactRule(b->rule)) {
        GroundAtom fact{b->rule.conclusion.name, {}};
        for (const auto& a : b->rule.conclusion.children) {
          fact.args.push_back(a.name);
        }
        out.facts.push_back(std::move(fact));
      } else {
        out.rules.push_back(b->rule);
      }
    } else if (const auto* b = std::get_if<LexiconBlock>(&block)) {
      for (const auto& e : b->entries) {
        if (out.FindPredicate(e.key) == nullptr &&
            out.FindClass(e.key) == nullptr) {
          Diag(diags, DiagCode::kUnknownSymbol, e.span,
               "lexicon entry for unknown symbol '" + e.key + "'");
          continue;
        }
        out.lexicon.push_back(e);
      }
    }
  }
  return result;
}

SourceProgram Lower(const NormalizedProgram& program) {
  SourceProgram src;
  ClassBlock classes;
  for (const auto& c : program.classes) {
    ClassDecl decl{c.name, {}, c.span};
    for (const auto& p : program.predicates) {
      if (p.origin == PredicateOrigin::kField && p.owner == c.name) {
        decl.fields.push_back({p.name, ArrowOf(p.arg_classes, 1), p.span});
      }
    }
    classes.classes.push_back(std::move(decl));
  }
  if (!classes.classes.empty()) src.blocks.emplace_back(std::move(classes));

  DeclBlock decls;
  for (const auto& c : program.classes) {
    for (const auto& k : c.constants) {
      decls.decls.push_back({k, TypeExpr::ClassRef(c.name), {}});
    }
  }
  for (const auto& p : program.predicates) {
    if (p.origin == PredicateOrigin::kStandalone) {
      decls.decls.push_back({p.name, ArrowOf(p.arg_classes, 0), p.span});
    }
  }
  if (!decls.decls.empty()) src.blocks.emplace_back(std::move(decls));

  for (const auto& r : program.rules) src.blocks.emplace_back(RuleBlock{r, {}});
  for (size_t i = 0; i < program.facts.size(); ++i) {
    const GroundAtom& f = program.facts[i];
    RuleDecl r;
    r.name = "fact" + std::to_string(i + 1);
    std::vector<Expr> args;
    for (const auto& a : f.args) args.push_back(Expr::Const(a));
    r.conclusion = Expr::Apply(f.predicate, std::move(args));
    src.blocks.emplace_back(RuleBlock{std::move(r), {}});
  }
  if (!program.lexicon.empty()) {
    src.blocks.emplace_back(LexiconBlock{program.lexicon, {}});
  }
  return src;
}

std::vector<Diagnostic> TypeCheck(const NormalizedProgram& program) {
  return Checker(program).Run();
}

std::vector<NormalizedPredicate> AskablePredicates(
    const NormalizedProgram& program, std::string_view goal) {
  const NormalizedPredicate* goal_pred = program.FindPredicate(goal);
  if (goal_pred == nullptr) {
    throw Error(ErrorCode::kUnknownGoal,
                "unknown goal predicate '" + std::string(goal) + "'");
  }
  if (!program.HasDefiningRule(goal) && !program.HasFacts(goal)) {
    throw Error(ErrorCode::kNoRuleForGoal,
                "no rule concludes '" + std::string(goal) + "'");
  }

  std::vector<std::string> reached;   // predicates in first-occurrence order
  std::vector<std::string> classes;   // variable classes in occurrence order
  std::set<std::string> visited;
  auto note = [](std::vector<std::string>* v, const std::string& s) {
    if (std::find(v->begin(), v->end(), s) == v->end()) v->push_back(s);
  };
  auto visit = [&](auto&& self, const std::string& pred) -> void {
    if (!visited.insert(pred).second) return;
    for (const auto& rule : program.rules) {
      if (rule.conclusion.name != pred) continue;
      for (const auto& b : rule.binders) note(&classes, b.class_name);
      if (!rule.condition) continue;
      std::vector<const Expr*> stack = {&*rule.condition};
      while (!stack.empty()) {
        const Expr* e = stack.back();
        stack.pop_back();
        if (e->kind == Expr::Kind::kExists) note(&classes, e->class_name);
        for (auto it = e->children.rbegin(); it != e->children.rend(); ++it) {
          if (it->kind != Expr::Kind::kVar && it->kind != Expr::Kind::kConst) {
            stack.push_back(&*it);
          }
        }
      }
      for (const Expr* atom : FlattenAtoms(*rule.condition)) {
        note(&reached, atom->name);
        if (program.HasDefiningRule(atom->name)) self(self, atom->name);
      }
    }
  };
  visit(visit, std::string(goal));

  auto is_given = [&](const NormalizedPredicate& p) {
    if (p.name == goal || program.HasDefiningRule(p.name)) return true;
    if (!program.HasFacts(p.name)) return false;
    return std::all_of(p.arg_classes.begin(), p.arg_classes.end(),
                       [&](const std::string& c) {
                         const ClassInfo* ci = program.FindClass(c);
                         return ci != nullptr && ci->is_enumerated;
                       });
  };

  std::vector<NormalizedPredicate> relations;
  for (const auto& name : reached) {
    const NormalizedPredicate* p = program.FindPredicate(name);
    if (p == nullptr || is_given(*p)) continue;
    if (p->origin == PredicateOrigin::kMembership) {
      note(&classes, p->owner);
      continue;
    }
    relations.push_back(*p);
  }

  std::vector<NormalizedPredicate> memberships;
  if (program.HasDefiningRule(goal)) {
    const std::string& primary = goal_pred->arg_classes.front();
    std::vector<std::string> order = {primary};
    for (const auto& c : classes) note(&order, c);
    for (const auto& c : order) {
      const ClassInfo* ci = program.FindClass(c);
      const NormalizedPredicate* m = program.MembershipOf(c);
      if (ci == nullptr || m == nullptr || ci->is_enumerated || is_given(*m)) {
        continue;
      }
      bool implied = std::any_of(
          relations.begin(), relations.end(), [&](const auto& r) {
            return std::find(r.arg_classes.begin(), r.arg_classes.end(), c) !=
                   r.arg_classes.end();
          });
      if (c == primary || !implied) memberships.push_back(*m);
    }
  }
  memberships.insert(memberships.end(), relations.begin(), relations.end());
  return memberships;
}

}  // namespace l4
