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

#include "oracles.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace l4::testing {
namespace {

using Binding = std::map<std::string, std::string>;

bool Unify(const Atom& pattern, const GroundAtom& atom, Binding* b) {
  if (pattern.predicate != atom.predicate ||
      pattern.args.size() != atom.args.size()) {
    return false;
  }
  for (size_t i = 0; i < atom.args.size(); ++i) {
    const Term& t = pattern.args[i];
    if (!t.is_var()) {
      if (t.name != atom.args[i]) return false;
      continue;
    }
    auto [it, fresh] = b->emplace(t.name, atom.args[i]);
    if (!fresh && it->second != atom.args[i]) return false;
  }
  return true;
}

GroundAtom Apply(const Atom& a, const Binding& b) {
  GroundAtom g{a.predicate, {}};
  for (const auto& t : a.args) g.args.push_back(t.is_var() ? b.at(t.name) : t.name);
  return g;
}

using Buckets = std::map<std::string, std::vector<const GroundAtom*>>;

bool Mentions(const Atom& a, const std::string& var) {
  return std::any_of(a.args.begin(), a.args.end(),
                     [&](const Term& t) { return t.is_var() && t.name == var; });
}

// True when some extension of `b` satisfies every atom in `goals`. Goals
// that share no open variable are solved separately.
bool Satisfiable(std::vector<const Atom*> goals, const Binding& b,
                 const Buckets& buckets) {
  if (goals.empty()) return true;
  std::vector<const Atom*> group = {goals[0]}, rest;
  for (size_t i = 1; i < goals.size(); ++i) rest.push_back(goals[i]);
  for (bool grew = true; grew;) {
    grew = false;
    for (auto it = rest.begin(); it != rest.end();) {
      bool shares = false;
      for (const Atom* g : group) {
        for (const Term& t : g->args) {
          shares |= t.is_var() && !b.count(t.name) && Mentions(**it, t.name);
        }
      }
      if (shares) {
        group.push_back(*it);
        it = rest.erase(it);
        grew = true;
      } else {
        ++it;
      }
    }
  }
  if (!rest.empty()) {
    return Satisfiable(group, b, buckets) && Satisfiable(rest, b, buckets);
  }
  auto it = buckets.find(goals[0]->predicate);
  if (it == buckets.end()) return false;
  std::vector<const Atom*> tail(goals.begin() + 1, goals.end());
  for (const GroundAtom* atom : it->second) {
    Binding next = b;
    if (Unify(*goals[0], *atom, &next) && Satisfiable(tail, next, buckets)) {
      return true;
    }
  }
  return false;
}

// Appends each instance of the head of `c`, with variables drawn from
// `domain`, whose body is satisfiable.
void EachHeadGrounding(const Clause& c, const std::vector<std::string>& domain,
                       std::vector<GroundAtom>* out, const Buckets& buckets) {
  std::vector<std::string> vars;
  for (const Term& t : c.head.args) {
    if (t.is_var() && std::find(vars.begin(), vars.end(), t.name) == vars.end()) {
      vars.push_back(t.name);
    }
  }
  std::vector<size_t> digits(vars.size(), 0);
  if (!vars.empty() && domain.empty()) return;
  for (;;) {
    Binding b;
    for (size_t k = 0; k < vars.size(); ++k) b[vars[k]] = domain[digits[k]];
    std::vector<const Atom*> goals;
    for (const Atom& a : c.body) goals.push_back(&a);
    if (Satisfiable(goals, b, buckets)) out->push_back(Apply(c.head, b));
    size_t k = 0;
    while (k < digits.size() && ++digits[k] == domain.size()) digits[k++] = 0;
    if (k == digits.size()) return;
  }
}

}  // namespace

Model NaiveClosure(const std::vector<Clause>& clauses, const FactBase& facts) {
  Model model(facts.atoms.begin(), facts.atoms.end());
  for (const auto& c : clauses) {
    if (c.body.empty()) model.insert(c.head.ToGround());
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::set<std::string> constants;
    Buckets buckets;
    for (const auto& a : model) {
      buckets[a.predicate].push_back(&a);
      constants.insert(a.args.begin(), a.args.end());
    }
    for (const auto& c : clauses) {
      for (const auto& t : c.head.args) {
        if (!t.is_var()) constants.insert(t.name);
      }
    }
    std::vector<std::string> domain(constants.begin(), constants.end());
    std::vector<GroundAtom> derived;
    for (const auto& c : clauses) {
      if (!c.body.empty()) EachHeadGrounding(c, domain, &derived, buckets);
    }
    for (auto& a : derived) changed |= model.insert(std::move(a)).second;
  }
  return model;
}

bool SelfCertifies(const std::vector<Clause>& clauses, const FactBase& facts,
                   const Model& model, const GroundAtom& conclusion,
                   const std::vector<GroundAtom>& support) {
  for (const auto& a : support) {
    if (model.count(a) == 0) return false;
  }
  if (support.size() == 1 && support[0] == conclusion) {
    if (facts.Contains(conclusion)) return true;
    for (const auto& c : clauses) {
      if (c.body.empty() && c.head.IsGround() && c.head.ToGround() == conclusion) {
        return true;
      }
    }
  }
  for (const auto& c : clauses) {
    if (c.body.size() != support.size() || c.body.empty()) continue;
    Binding b;
    if (!Unify(c.head, conclusion, &b)) continue;
    bool ok = true;
    for (size_t i = 0; i < support.size() && ok; ++i) {
      ok = Unify(c.body[i], support[i], &b);
    }
    if (ok) return true;
  }
  return false;
}

namespace {

class PrologChecker {
 public:
  explicit PrologChecker(std::string_view text) : s_(text) {}

  std::optional<std::string> Run() {
    int queries = 0;
    for (;;) {
      Skip();
      if (pos_ >= s_.size()) break;
      bool query = false;
      if (s_.compare(pos_, 2, "?-") == 0) {
        pos_ += 2;
        query = true;
        ++queries;
        if (!Body()) return Fail("bad query");
      } else {
        if (!Term(true)) return Fail("expected a clause head");
        Skip();
        if (s_.compare(pos_, 2, ":-") == 0) {
          pos_ += 2;
          if (!Body()) return Fail("bad rule body");
        } else if (has_var_) {
          return Fail("fact with a variable");
        }
      }
      Skip();
      if (pos_ >= s_.size() || s_[pos_] != '.') return Fail("expected '.'");
      ++pos_;
      if (query && queries > 1) return Fail("more than one query");
    }
    if (queries != 1) return std::string("expected exactly one query");
    return std::nullopt;
  }

 private:
  std::string Fail(const std::string& why) const {
    size_t line = 1;
    for (size_t i = 0; i < pos_ && i < s_.size(); ++i) line += s_[i] == '\n';
    return "line " + std::to_string(line) + ": " + why;
  }

  void Skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '%') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool Name(bool* is_var) {
    Skip();
    size_t start = pos_;
    if (pos_ >= s_.size()) return false;
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (c == '\'') {
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '\'') {
        if (s_[pos_] == '\\') ++pos_;
        ++pos_;
      }
      if (pos_ >= s_.size()) return false;
      ++pos_;
      *is_var = false;
      return true;
    }
    if (!std::isalpha(c) && c != '_' && !std::isdigit(c)) return false;
    *is_var = std::isupper(c) || c == '_';
    bool number = std::isdigit(c);
    while (pos_ < s_.size()) {
      unsigned char d = static_cast<unsigned char>(s_[pos_]);
      if (number ? !std::isdigit(d) : !(std::isalnum(d) || d == '_')) break;
      ++pos_;
    }
    return pos_ > start;
  }

  bool Term(bool head) {
    if (head) has_var_ = false;
    bool var = false;
    if (!Name(&var) || var) return false;
    Skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      for (;;) {
        bool arg_var = false;
        if (!Name(&arg_var)) return false;
        if (head) has_var_ |= arg_var;
        Skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        return false;
      }
    }
    return true;
  }

  bool Body() {
    for (;;) {
      if (!Term(false)) return false;
      Skip();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      return true;
    }
  }

  std::string_view s_;
  size_t pos_ = 0;
  bool has_var_ = false;
};

}  // namespace

std::optional<std::string> CheckPrologClauses(std::string_view text) {
  return PrologChecker(text).Run();
}

}  // namespace l4::testing
