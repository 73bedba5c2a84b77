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

#include "l4/asp.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "l4/diagnostic.h"

namespace l4 {
namespace {

std::string Unique(std::string base, std::set<std::string>* taken) {
  std::string name = base;
  for (int n = 2; !taken->insert(name).second; ++n) {
    name = base + std::to_string(n);
  }
  return name;
}

std::string VariableName(std::string_view id) {
  std::string out;
  for (char c : id) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  if (out.empty() || !std::isalpha(static_cast<unsigned char>(out[0]))) {
    out = "V" + out;
  }
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

void CollectExistentials(const Expr& e,
                         std::vector<std::pair<std::string, std::string>>* out) {
  if (e.kind == Expr::Kind::kExists) out->emplace_back(e.name, e.class_name);
  for (const auto& c : e.children) CollectExistentials(c, out);
}

}  // namespace

bool Atom::IsGround() const {
  return std::none_of(args.begin(), args.end(),
                      [](const Term& t) { return t.is_var(); });
}

GroundAtom Atom::ToGround() const {
  GroundAtom g{predicate, {}};
  for (const auto& t : args) g.args.push_back(t.name);
  return g;
}

Atom Atom::FromGround(const GroundAtom& atom) {
  Atom a{atom.predicate, {}};
  for (const auto& c : atom.args) a.args.push_back(Term::Const(c));
  return a;
}

bool IsRangeRestricted(const Clause& clause) {
  for (const auto& t : clause.head.args) {
    if (!t.is_var()) continue;
    bool found = std::any_of(clause.body.begin(), clause.body.end(),
                             [&](const Atom& a) {
                               return std::find(a.args.begin(), a.args.end(),
                                                t) != a.args.end();
                             });
    if (!found) return false;
  }
  return true;
}

std::string ToString(const Atom& atom) {
  std::string out = atom.predicate;
  if (atom.args.empty()) return out;
  out += "(";
  for (size_t i = 0; i < atom.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += atom.args[i].name;
  }
  return out + ")";
}

std::string ToString(const Clause& clause) {
  std::string out = ToString(clause.head);
  for (size_t i = 0; i < clause.body.size(); ++i) {
    out += i == 0 ? " :- " : ", ";
    out += ToString(clause.body[i]);
  }
  return out + ".";
}

std::string MangleIdentifier(std::string_view id) {
  std::string out;
  for (size_t i = 0; i < id.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(id[i]);
    if (std::isupper(c) && i > 0) {
      unsigned char prev = static_cast<unsigned char>(id[i - 1]);
      if ((std::islower(prev) || std::isdigit(prev)) && out.back() != '_') {
        out += '_';
      }
    }
    out += static_cast<char>(std::tolower(c));
  }
  if (out.empty() || !std::islower(static_cast<unsigned char>(out[0]))) {
    out = "c" + out;
  }
  return out;
}

std::string Slugify(std::string_view text) {
  std::string out;
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) {
      out += static_cast<char>(std::tolower(c));
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  if (!out.empty() && std::isdigit(static_cast<unsigned char>(out[0]))) {
    out = "c_" + out;
  }
  return out;
}

SymbolTable SymbolTable::Build(const NormalizedProgram& program) {
  SymbolTable t;
  std::set<std::string> taken;
  for (const auto& p : program.predicates) {
    std::string asp = Unique(MangleIdentifier(p.name), &taken);
    t.pred_to_asp_[p.name] = asp;
    t.asp_to_pred_[asp] = p;
    if (p.origin == PredicateOrigin::kMembership) t.membership_[p.owner] = asp;
  }
  taken.clear();
  for (const auto& c : program.classes) {
    auto& list = t.class_consts_[c.name];
    for (const auto& k : c.constants) {
      std::string asp = Unique(MangleIdentifier(k), &taken);
      t.const_to_asp_[k] = asp;
      t.asp_to_const_[asp] = {k, c.name};
      list.push_back(asp);
    }
  }
  return t;
}

std::string SymbolTable::PredicateName(std::string_view l4_name) const {
  auto it = pred_to_asp_.find(l4_name);
  return it != pred_to_asp_.end() ? it->second : MangleIdentifier(l4_name);
}

std::string SymbolTable::ConstantName(std::string_view l4_name) const {
  auto it = const_to_asp_.find(l4_name);
  return it != const_to_asp_.end() ? it->second : MangleIdentifier(l4_name);
}

std::string SymbolTable::MembershipPredicate(std::string_view cls) const {
  auto it = membership_.find(cls);
  return it != membership_.end() ? it->second : MembershipPredicateName(cls);
}

const NormalizedPredicate* SymbolTable::Predicate(std::string_view name) const {
  auto it = asp_to_pred_.find(name);
  return it != asp_to_pred_.end() ? &it->second : nullptr;
}

std::optional<std::string> SymbolTable::ClassOfConstant(
    std::string_view name) const {
  auto it = asp_to_const_.find(name);
  if (it == asp_to_const_.end()) return std::nullopt;
  return it->second.second;
}

std::optional<std::string> SymbolTable::SourceConstant(
    std::string_view name) const {
  auto it = asp_to_const_.find(name);
  if (it == asp_to_const_.end()) return std::nullopt;
  return it->second.first;
}

std::vector<std::string> SymbolTable::ConstantsOf(
    std::string_view class_name) const {
  auto it = class_consts_.find(class_name);
  return it != class_consts_.end() ? it->second : std::vector<std::string>{};
}

CompiledProgram Compile(NormalizedProgram program) {
  CompiledProgram out;
  out.symbols = SymbolTable::Build(program);
  const SymbolTable& sym = out.symbols;

  std::vector<Clause> rules;
  for (const auto& rule : program.rules) {
    std::map<std::string, std::string> var_names;
    std::map<std::string, std::string> var_class;
    std::set<std::string> taken;
    auto bind = [&](const std::string& var, const std::string& cls) {
      var_names[var] = Unique(VariableName(var), &taken);
      var_class[var] = cls;
    };
    for (const auto& b : rule.binders) bind(b.var, b.class_name);
    std::vector<std::pair<std::string, std::string>> existentials;
    if (rule.condition) CollectExistentials(*rule.condition, &existentials);
    for (const auto& [var, cls] : existentials) bind(var, cls);

    auto term = [&](const Expr& arg) {
      if (arg.kind == Expr::Kind::kVar) return Term::Var(var_names.at(arg.name));
      return Term::Const(sym.ConstantName(arg.name));
    };
    auto atom = [&](const Expr& app) {
      Atom a{sym.PredicateName(app.name), {}};
      for (const auto& arg : app.children) a.args.push_back(term(arg));
      return a;
    };
    auto membership = [&](const std::string& var) {
      return Atom{sym.MembershipPredicate(var_class.at(var)),
                  {Term::Var(var_names.at(var))}};
    };

    Clause clause;
    clause.head = atom(rule.conclusion);
    std::set<std::string> typed;
    for (const auto& arg : rule.conclusion.children) {
      if (arg.kind == Expr::Kind::kVar && typed.insert(arg.name).second) {
        clause.body.push_back(membership(arg.name));
      }
    }
    for (const auto& [var, cls] : existentials) {
      if (typed.insert(var).second) clause.body.push_back(membership(var));
    }
    if (rule.condition) {
      for (const Expr* a : FlattenAtoms(*rule.condition)) {
        clause.body.push_back(atom(*a));
      }
    }
    if (!IsRangeRestricted(clause)) {
      throw Error(ErrorCode::kNonRangeRestricted,
                  "rule <" + rule.name + "> is not range restricted");
    }
    rules.push_back(std::move(clause));
  }

  for (const auto& f : program.facts) {
    GroundAtom g{sym.PredicateName(f.predicate), {}};
    for (const auto& a : f.args) g.args.push_back(sym.ConstantName(a));
    out.clauses.push_back({Atom::FromGround(g), {}});
  }
  std::set<std::string> used_in_bodies;
  for (const auto& r : rules) {
    for (const auto& a : r.body) used_in_bodies.insert(a.predicate);
  }
  for (const auto& c : program.classes) {
    std::string m = sym.MembershipPredicate(c.name);
    if (!used_in_bodies.count(m)) continue;
    for (const auto& k : sym.ConstantsOf(c.name)) {
      out.clauses.push_back({Atom{m, {Term::Const(k)}}, {}});
    }
  }
  for (auto& r : rules) out.clauses.push_back(std::move(r));
  out.program = std::move(program);
  return out;
}

bool QuerySpec::Matches(const GroundAtom& atom) const {
  if (atom.predicate != predicate || atom.args.size() != arity) return false;
  for (const auto& [pos, value] : bound) {
    if (atom.args[pos] != value) return false;
  }
  return true;
}

QuerySpec MakeQuery(const CompiledProgram& compiled, std::string_view goal,
                    std::map<size_t, std::string> bound) {
  const NormalizedPredicate* pred = compiled.program.FindPredicate(goal);
  std::string name;
  if (pred != nullptr) {
    name = compiled.symbols.PredicateName(goal);
  } else {
    pred = compiled.symbols.Predicate(goal);
    name = std::string(goal);
  }
  if (pred == nullptr) {
    throw Error(ErrorCode::kUnknownGoal,
                "unknown goal predicate '" + std::string(goal) + "'");
  }
  QuerySpec q;
  q.predicate = name;
  q.arity = pred->arity();
  for (const auto& [pos, value] : bound) {
    if (pos >= q.arity) {
      throw Error(ErrorCode::kInvalidArgument,
                  "query position " + std::to_string(pos) + " out of range");
    }
  }
  q.bound = std::move(bound);
  std::set<std::string> taken;
  for (size_t i = 0; i < q.arity; ++i) {
    if (q.bound.count(i)) continue;
    q.free.push_back(
        {i, Unique(VariableName(pred->arg_classes[i]), &taken)});
  }
  return q;
}

std::string ToString(const QuerySpec& query) {
  std::string out = "?- " + query.predicate + "(";
  for (size_t i = 0; i < query.arity; ++i) {
    if (i > 0) out += ", ";
    if (auto it = query.bound.find(i); it != query.bound.end()) {
      out += it->second;
      continue;
    }
    for (const auto& f : query.free) {
      if (f.position == i) out += f.name;
    }
  }
  return out + ").";
}

ScaspExport ExportScasp(const std::vector<Clause>& clauses,
                        const QuerySpec& query) {
  ScaspExport out;
  for (const auto& c : clauses) {
    if (c.body.empty()) out.text += ToString(c) + "\n";
  }
  for (const auto& c : clauses) {
    if (!c.body.empty()) out.text += ToString(c) + "\n";
  }
  std::set<std::string> names;
  for (const auto& f : query.free) {
    if (!names.insert(f.name).second) {
      out.warnings.push_back("query variable " + f.name + " used twice");
    }
  }
  out.text += ToString(query) + "\n";
  return out;
}

}  // namespace l4
