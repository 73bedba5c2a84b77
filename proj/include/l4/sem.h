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

// Symbol table construction, field-to-standalone normalization and type
// checking.

#ifndef L4_SEM_H_
#define L4_SEM_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l4/ast.h"
#include "l4/diagnostic.h"

namespace l4 {

enum class PredicateOrigin {
  kStandalone,
  kField,       // declared inside a class body; owner is argument 0
  kMembership,  // synthesized "x is a C" predicate, one per class
};

struct NormalizedPredicate {
  std::string name;
  std::vector<std::string> arg_classes;
  PredicateOrigin origin = PredicateOrigin::kStandalone;
  // kField: the owner class. kMembership: the class itself.
  std::string owner;
  Span span;

  size_t arity() const { return arg_classes.size(); }
  bool operator==(const NormalizedPredicate&) const = default;
};

struct ClassInfo {
  std::string name;
  std::vector<std::string> constants;
  bool is_enumerated = false;
  Span span;
  bool operator==(const ClassInfo&) const = default;
};

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  auto operator<=>(const GroundAtom&) const = default;
  bool operator==(const GroundAtom&) const = default;
};

std::string ToString(const GroundAtom& atom);

struct NormalizedProgram {
  std::vector<ClassInfo> classes;
  // Membership predicates first (class order), then fields (class and
  // field order), then standalone declarations (declaration order).
  std::vector<NormalizedPredicate> predicates;
  std::vector<RuleDecl> rules;  // rules with a condition or binders
  std::vector<GroundAtom> facts;
  std::vector<LexiconDecl> lexicon;

  const ClassInfo* FindClass(std::string_view name) const;
  const NormalizedPredicate* FindPredicate(std::string_view name) const;
  const NormalizedPredicate* MembershipOf(std::string_view class_name) const;
  std::optional<std::string> ClassOfConstant(std::string_view name) const;
  bool HasDefiningRule(std::string_view predicate) const;
  bool HasFacts(std::string_view predicate) const;

  bool operator==(const NormalizedProgram&) const = default;
};

struct NormalizeResult {
  NormalizedProgram program;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

// Lowercased class name.
std::string MembershipPredicateName(std::string_view class_name);

NormalizeResult Normalize(const SourceProgram& program);

// Back to source form with the original grouping; membership predicates are
// implicit and facts become condition-free rules.
SourceProgram Lower(const NormalizedProgram& program);

// Empty iff every atom matches its predicate's arity and argument classes
// and every variable is bound.
std::vector<Diagnostic> TypeCheck(const NormalizedProgram& program);

// Predicates the interview has to ask about to decide `goal`: reachable
// from the goal's rules, not rule-defined, not given by a complete fact
// table. The goal's first argument class contributes its membership
// predicate; other classes are implied by the relations that mention them
// unless no askable relation does.
//
// Throws Error(kUnknownGoal) or Error(kNoRuleForGoal).
std::vector<NormalizedPredicate> AskablePredicates(
    const NormalizedProgram& program, std::string_view goal);

// Atoms of `expr` in left-to-right order, looking through && and exists.
std::vector<const Expr*> FlattenAtoms(const Expr& expr);

}  // namespace l4

#endif  // L4_SEM_H_
