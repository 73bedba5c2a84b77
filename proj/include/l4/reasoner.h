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

// Bottom-up evaluation of positive clause programs.

#ifndef L4_REASONER_H_
#define L4_REASONER_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "l4/asp.h"
#include "l4/sem.h"

namespace l4 {

struct FactBase {
  std::set<GroundAtom> atoms;
  // Optional display names for constants ("rps" -> "RPS").
  std::map<std::string, std::string> names;

  void Add(GroundAtom atom) { atoms.insert(std::move(atom)); }
  bool Contains(const GroundAtom& atom) const { return atoms.count(atom) > 0; }
  bool operator==(const FactBase&) const = default;
};

// {"atoms": [{"pred": "throw", "args": ["alice", "paper"]}], "names": {...}}
// "names" is optional. Throws Error(kInvalidArgument) on malformed input.
FactBase FactsFromJson(std::string_view text);
std::string FactsToJson(const FactBase& facts);

using Model = std::set<GroundAtom>;

// Least fixed point of the immediate-consequence operator, computed
// semi-naively.
Model LeastModel(const std::vector<Clause>& clauses, const FactBase& facts);

struct AnswerSet {
  GroundAtom conclusion;
  std::map<size_t, std::string> binding;  // free query position -> constant
  // Ground body of the deriving rule instance, membership atoms first. A
  // given fact supports itself.
  std::vector<GroundAtom> support;

  bool operator==(const AnswerSet&) const = default;
};

// One answer set per matching atom of the least model, in model order.
// When several rule instances derive an atom, the first rule in source
// order and the first grounding in constant order wins.
// Throws Error(kUnknownPredicate).
std::vector<AnswerSet> Answer(const std::vector<Clause>& clauses,
                              const FactBase& facts, const QuerySpec& query);

// Ground body atoms of the first rule instance deriving `atom` from
// `model`, or empty when no rule derives it.
std::vector<GroundAtom> Justify(const std::vector<Clause>& clauses,
                                const Model& model, const GroundAtom& atom);

struct HypotheticalSpace {
  std::string open_predicate;
  size_t chooser_arg = 0;               // position that takes a candidate
  std::vector<std::string> candidates;  // declaration order
  // Values for the remaining positions, one tuple per chooser instance.
  std::vector<std::vector<std::string>> instances;
};

// Candidates are the constants of the open predicate's enumerated argument;
// instances are the known members of the other argument classes.
HypotheticalSpace MakeHypotheticalSpace(const CompiledProgram& compiled,
                                        const FactBase& facts,
                                        std::string_view open_predicate);

// Tries every assignment of one candidate per instance (first instance
// varies slowest) and collects the answer sets of assignments where the
// query succeeds, in assignment order. Assignments may be evaluated in
// parallel. Throws Error(kOpenPredicateAlreadyGround) when `facts` already
// contain the open predicate.
std::vector<AnswerSet> EnumerateHypotheticals(
    const std::vector<Clause>& clauses, const FactBase& facts,
    const HypotheticalSpace& space, const QuerySpec& query);

}  // namespace l4

#endif  // L4_REASONER_H_
