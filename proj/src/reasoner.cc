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

#include "l4/reasoner.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <unordered_map>
#include <utility>

#include "json.hpp"

#include "l4/diagnostic.h"

namespace l4 {
namespace {

using json = nlohmann::json;

// Clause with variables replaced by dense indices.
struct Pattern {
  struct Arg {
    int var = -1;  // -1 for constants
    std::string constant;
  };
  std::string predicate;
  std::vector<Arg> args;
};

struct IndexedRule {
  Pattern head;
  std::vector<Pattern> body;
  int num_vars = 0;
};

IndexedRule IndexRule(const Clause& clause) {
  IndexedRule out;
  std::map<std::string, int> vars;
  auto convert = [&](const Atom& atom) {
    Pattern p{atom.predicate, {}};
    for (const auto& t : atom.args) {
      if (t.is_var()) {
        auto [it, inserted] = vars.emplace(t.name, static_cast<int>(vars.size()));
        p.args.push_back({it->second, {}});
      } else {
        p.args.push_back({-1, t.name});
      }
    }
    return p;
  };
  for (const auto& a : clause.body) out.body.push_back(convert(a));
  out.head = convert(clause.head);
  out.num_vars = static_cast<int>(vars.size());
  return out;
}

using Binding = std::vector<const std::string*>;

// Extends `b` so that `p` matches `atom`; records newly bound variables in
// `trail` so the caller can undo.
bool Match(const Pattern& p, const GroundAtom& atom, Binding* b,
           std::vector<int>* trail) {
  if (atom.args.size() != p.args.size()) return false;
  for (size_t i = 0; i < p.args.size(); ++i) {
    const auto& arg = p.args[i];
    if (arg.var < 0) {
      if (arg.constant != atom.args[i]) return false;
      continue;
    }
    const std::string*& slot = (*b)[arg.var];
    if (slot == nullptr) {
      slot = &atom.args[i];
      trail->push_back(arg.var);
    } else if (*slot != atom.args[i]) {
      return false;
    }
  }
  return true;
}

void Undo(Binding* b, std::vector<int>* trail, size_t mark) {
  while (trail->size() > mark) {
    (*b)[trail->back()] = nullptr;
    trail->pop_back();
  }
}

GroundAtom Instantiate(const Pattern& p, const Binding& b) {
  GroundAtom g{p.predicate, {}};
  for (const auto& arg : p.args) {
    g.args.push_back(arg.var < 0 ? arg.constant : *b[arg.var]);
  }
  return g;
}

// Atoms grouped by predicate, each group in set order.
using Index = std::unordered_map<std::string, std::vector<const GroundAtom*>>;

Index BuildIndex(const Model& model) {
  Index idx;
  for (const auto& a : model) idx[a.predicate].push_back(&a);
  return idx;
}

size_t BoundArgs(const Pattern& p, const Binding& b) {
  size_t n = 0;
  for (const auto& arg : p.args) n += arg.var < 0 || b[arg.var] != nullptr;
  return n;
}

bool AllBound(const std::vector<int>& vars, const Binding& b) {
  return std::all_of(vars.begin(), vars.end(),
                     [&](int v) { return b[v] != nullptr; });
}

// Partitions `remaining` into groups that share no unbound variable.
std::vector<std::vector<size_t>> Components(const IndexedRule& rule,
                                            const std::vector<size_t>& remaining,
                                            const Binding& b) {
  std::vector<int> group(remaining.size(), -1);
  int groups = 0;
  for (size_t seed = 0; seed < remaining.size(); ++seed) {
    if (group[seed] >= 0) continue;
    group[seed] = groups;
    std::vector<size_t> stack = {seed};
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      for (size_t other = 0; other < remaining.size(); ++other) {
        if (group[other] >= 0) continue;
        bool linked = false;
        for (const auto& x : rule.body[remaining[cur]].args) {
          if (x.var < 0 || b[x.var] != nullptr) continue;
          for (const auto& y : rule.body[remaining[other]].args) {
            linked |= y.var == x.var;
          }
        }
        if (linked) {
          group[other] = groups;
          stack.push_back(other);
        }
      }
    }
    ++groups;
  }
  std::vector<std::vector<size_t>> out(groups);
  for (size_t i = 0; i < remaining.size(); ++i) out[group[i]].push_back(remaining[i]);
  return out;
}

std::vector<size_t>::iterator MostBound(const IndexedRule& rule,
                                        std::vector<size_t>* remaining,
                                        const Binding& b) {
  return std::max_element(remaining->begin(), remaining->end(), [&](size_t x, size_t y) {
    return BoundArgs(rule.body[x], b) < BoundArgs(rule.body[y], b);
  });
}

// True when some extension of `b` grounds every position in `remaining`.
// Leaves `b` unchanged.
bool Exists(const IndexedRule& rule, std::vector<size_t> remaining,
            const Index& idx, Binding* b, std::vector<int>* trail) {
  if (remaining.empty()) return true;
  auto parts = Components(rule, remaining, *b);
  if (parts.size() > 1) {
    for (auto& part : parts) {
      if (!Exists(rule, std::move(part), idx, b, trail)) return false;
    }
    return true;
  }
  auto best = MostBound(rule, &remaining, *b);
  const Pattern& p = rule.body[*best];
  remaining.erase(best);
  auto it = idx.find(p.predicate);
  if (it == idx.end()) return false;
  for (const GroundAtom* atom : it->second) {
    size_t mark = trail->size();
    bool ok = Match(p, *atom, b, trail) && Exists(rule, remaining, idx, b, trail);
    Undo(b, trail, mark);
    if (ok) return true;
  }
  return false;
}

// Enumerates groundings of the body positions in `remaining` against `idx`,
// calling `emit` for each binding. `emit` returns false to stop. With
// `wanted` set, only bindings of those variables are enumerated; the other
// positions are checked for a single witness.
bool Join(const IndexedRule& rule, std::vector<size_t> remaining, const Index& idx,
          Binding* b, std::vector<int>* trail, const std::vector<int>* wanted,
          const std::function<bool()>& emit) {
  if (remaining.empty()) return emit();
  if (wanted != nullptr) {
    if (AllBound(*wanted, *b)) {
      return Exists(rule, remaining, idx, b, trail) ? emit() : true;
    }
    std::vector<size_t> linked;
    for (auto& part : Components(rule, remaining, *b)) {
      bool reaches = false;
      for (size_t pos : part) {
        for (const auto& arg : rule.body[pos].args) {
          reaches |= arg.var >= 0 && (*b)[arg.var] == nullptr &&
                     std::find(wanted->begin(), wanted->end(), arg.var) !=
                         wanted->end();
        }
      }
      if (reaches) {
        linked.insert(linked.end(), part.begin(), part.end());
      } else if (!Exists(rule, part, idx, b, trail)) {
        return true;
      }
    }
    remaining = std::move(linked);
  }
  auto best = MostBound(rule, &remaining, *b);
  const Pattern& p = rule.body[*best];
  remaining.erase(best);
  auto it = idx.find(p.predicate);
  if (it == idx.end()) return true;
  for (const GroundAtom* atom : it->second) {
    size_t mark = trail->size();
    if (Match(p, *atom, b, trail)) {
      if (!Join(rule, remaining, idx, b, trail, wanted, emit)) return false;
    }
    Undo(b, trail, mark);
  }
  return true;
}

std::vector<int> HeadVars(const IndexedRule& rule) {
  std::vector<int> out;
  for (const auto& arg : rule.head.args) {
    if (arg.var >= 0) out.push_back(arg.var);
  }
  return out;
}

Model BaseFacts(const std::vector<Clause>& clauses, const FactBase& facts) {
  Model base = facts.atoms;
  for (const auto& c : clauses) {
    if (c.IsFact()) base.insert(c.head.ToGround());
  }
  return base;
}

}  // namespace

FactBase FactsFromJson(std::string_view text) {
  FactBase out;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("facts: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array()) {
    throw Error(ErrorCode::kInvalidArgument,
                "facts: expected an object with an \"atoms\" array");
  }
  for (const auto& a : doc["atoms"]) {
    if (!a.is_object() || !a.contains("pred") || !a["pred"].is_string() ||
        !a.contains("args") || !a["args"].is_array()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "facts: each atom needs \"pred\" and \"args\"");
    }
    GroundAtom g{a["pred"].get<std::string>(), {}};
    for (const auto& arg : a["args"]) {
      if (!arg.is_string()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "facts: arguments must be strings");
      }
      g.args.push_back(arg.get<std::string>());
    }
    out.Add(std::move(g));
  }
  if (doc.contains("names")) {
    if (!doc["names"].is_object()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "facts: \"names\" must be an object");
    }
    for (const auto& [k, v] : doc["names"].items()) {
      if (!v.is_string()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "facts: display names must be strings");
      }
      out.names[k] = v.get<std::string>();
    }
  }
  return out;
}

std::string FactsToJson(const FactBase& facts) {
  json atoms = json::array();
  for (const auto& a : facts.atoms) {
    atoms.push_back({{"pred", a.predicate}, {"args", a.args}});
  }
  json doc = {{"atoms", atoms}};
  if (!facts.names.empty()) doc["names"] = facts.names;
  return doc.dump(2) + "\n";
}

Model LeastModel(const std::vector<Clause>& clauses, const FactBase& facts) {
  std::vector<IndexedRule> rules;
  for (const auto& c : clauses) {
    if (!c.IsFact()) rules.push_back(IndexRule(c));
  }
  Model model = BaseFacts(clauses, facts);
  Model delta = model;
  while (!delta.empty()) {
    Index full = BuildIndex(model);
    Index fresh = BuildIndex(delta);
    Model next;
    for (const auto& rule : rules) {
      if (rule.body.empty()) {
        // Ground head with an empty body is a fact and already in the base;
        // nothing else can fire without premises.
        continue;
      }
      for (size_t i = 0; i < rule.body.size(); ++i) {
        auto d = fresh.find(rule.body[i].predicate);
        if (d == fresh.end()) continue;
        std::vector<size_t> rest;
        for (size_t j = 0; j < rule.body.size(); ++j) {
          if (j != i) rest.push_back(j);
        }
        Binding b(rule.num_vars, nullptr);
        std::vector<int> trail;
        std::vector<int> head_vars = HeadVars(rule);
        for (const GroundAtom* atom : d->second) {
          if (!Match(rule.body[i], *atom, &b, &trail)) {
            Undo(&b, &trail, 0);
            continue;
          }
          Join(rule, rest, full, &b, &trail, &head_vars, [&] {
            GroundAtom head = Instantiate(rule.head, b);
            if (!model.count(head)) next.insert(std::move(head));
            return true;
          });
          Undo(&b, &trail, 0);
        }
      }
    }
    model.insert(next.begin(), next.end());
    delta = std::move(next);
  }
  return model;
}

std::vector<GroundAtom> Justify(const std::vector<Clause>& clauses,
                                const Model& model, const GroundAtom& atom) {
  Index idx = BuildIndex(model);
  for (const auto& c : clauses) {
    if (c.IsFact() || c.head.predicate != atom.predicate) continue;
    IndexedRule rule = IndexRule(c);
    Binding b(rule.num_vars, nullptr);
    std::vector<int> trail;
    if (!Match(rule.head, atom, &b, &trail)) continue;
    std::vector<size_t> order(rule.body.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::optional<std::vector<GroundAtom>> found;
    Join(rule, order, idx, &b, &trail, nullptr, [&] {
      std::vector<GroundAtom> support;
      for (const auto& p : rule.body) support.push_back(Instantiate(p, b));
      found = std::move(support);
      return false;
    });
    if (found) return *found;
  }
  return {};
}

std::vector<AnswerSet> Answer(const std::vector<Clause>& clauses,
                              const FactBase& facts, const QuerySpec& query) {
  bool known = std::any_of(facts.atoms.begin(), facts.atoms.end(),
                           [&](const GroundAtom& a) {
                             return a.predicate == query.predicate;
                           });
  for (const auto& c : clauses) {
    if (c.head.predicate == query.predicate) known = true;
    for (const auto& a : c.body) {
      if (a.predicate == query.predicate) known = true;
    }
  }
  if (!known) {
    throw Error(ErrorCode::kUnknownPredicate,
                "unknown predicate '" + query.predicate + "'");
  }
  Model base = BaseFacts(clauses, facts);
  Model model = LeastModel(clauses, facts);
  std::vector<AnswerSet> out;
  for (const auto& atom : model) {
    if (!query.Matches(atom)) continue;
    AnswerSet set;
    set.conclusion = atom;
    for (const auto& f : query.free) set.binding[f.position] = atom.args[f.position];
    if (base.count(atom)) {
      set.support = {atom};
    } else {
      set.support = Justify(clauses, model, atom);
    }
    out.push_back(std::move(set));
  }
  return out;
}

HypotheticalSpace MakeHypotheticalSpace(const CompiledProgram& compiled,
                                        const FactBase& facts,
                                        std::string_view open_predicate) {
  const NormalizedPredicate* pred = compiled.symbols.Predicate(open_predicate);
  std::string name(open_predicate);
  if (pred == nullptr) {
    if (compiled.program.FindPredicate(open_predicate) != nullptr) {
      name = compiled.symbols.PredicateName(open_predicate);
      pred = compiled.symbols.Predicate(name);
    }
  }
  if (pred == nullptr) {
    throw Error(ErrorCode::kUnknownPredicate,
                "unknown predicate '" + std::string(open_predicate) + "'");
  }
  HypotheticalSpace space;
  space.open_predicate = name;
  std::optional<size_t> chooser;
  for (size_t i = 0; i < pred->arity(); ++i) {
    const ClassInfo* ci = compiled.program.FindClass(pred->arg_classes[i]);
    if (ci != nullptr && ci->is_enumerated) chooser = i;
  }
  if (!chooser) {
    throw Error(ErrorCode::kInvalidArgument,
                "'" + name + "' has no argument over an enumerated class");
  }
  space.chooser_arg = *chooser;
  space.candidates =
      compiled.symbols.ConstantsOf(pred->arg_classes[*chooser]);

  auto members = [&](const std::string& cls) {
    std::vector<std::string> out = compiled.symbols.ConstantsOf(cls);
    std::string m = compiled.symbols.MembershipPredicate(cls);
    for (const auto& a : facts.atoms) {
      if (a.predicate == m && a.args.size() == 1 &&
          std::find(out.begin(), out.end(), a.args[0]) == out.end()) {
        out.push_back(a.args[0]);
      }
    }
    return out;
  };
  space.instances = {{}};
  for (size_t i = 0; i < pred->arity(); ++i) {
    if (i == *chooser) continue;
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : space.instances) {
      for (const auto& value : members(pred->arg_classes[i])) {
        auto tuple = prefix;
        tuple.push_back(value);
        next.push_back(std::move(tuple));
      }
    }
    space.instances = std::move(next);
  }
  return space;
}

std::vector<AnswerSet> EnumerateHypotheticals(
    const std::vector<Clause>& clauses, const FactBase& facts,
    const HypotheticalSpace& space, const QuerySpec& query) {
  if (space.candidates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no candidates to choose from");
  }
  for (const auto& a : facts.atoms) {
    if (a.predicate == space.open_predicate) {
      throw Error(ErrorCode::kOpenPredicateAlreadyGround,
                  "facts already fix " + ToString(a));
    }
  }
  const size_t n = space.instances.size();
  const size_t k = space.candidates.size();
  constexpr size_t kMaxAssignments = size_t{1} << 20;
  size_t total = 1;
  for (size_t i = 0; i < n; ++i) {
    if (total > kMaxAssignments / k) {
      throw Error(ErrorCode::kUnsupported,
                  "too many hypothetical assignments");
    }
    total *= k;
  }

  auto evaluate = [&](size_t index) {
    FactBase world = facts;
    // Digits of `index` in base k; the first instance is most significant.
    std::vector<size_t> digits(n);
    for (size_t i = n; i-- > 0;) {
      digits[i] = index % k;
      index /= k;
    }
    for (size_t i = 0; i < n; ++i) {
      GroundAtom atom{space.open_predicate, {}};
      size_t next = 0;
      for (size_t pos = 0; pos < space.instances[i].size() + 1; ++pos) {
        atom.args.push_back(pos == space.chooser_arg
                                ? space.candidates[digits[i]]
                                : space.instances[i][next++]);
      }
      world.Add(std::move(atom));
    }
    return Answer(clauses, world, query);
  };

  std::vector<std::vector<AnswerSet>> results(total);
  // Assignment 0 runs on the calling thread.
  results[0] = evaluate(0);
  size_t workers = std::min<size_t>(std::thread::hardware_concurrency(),
                                    total / 32);
  if (workers < 2) {
    for (size_t i = 1; i < total; ++i) results[i] = evaluate(i);
  } else {
    std::atomic<size_t> cursor{1};
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t i = cursor++; i < total; i = cursor++) {
          results[i] = evaluate(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<AnswerSet> out;
  for (auto& r : results) {
    for (auto& s : r) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace l4
