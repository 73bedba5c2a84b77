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

// Translation of normalized programs into Horn clauses and s(CASP) text.

#ifndef L4_ASP_H_
#define L4_ASP_H_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l4/sem.h"

namespace l4 {

struct Term {
  enum class Kind { kVar, kConst };
  Kind kind = Kind::kConst;
  std::string name;

  static Term Var(std::string name) { return {Kind::kVar, std::move(name)}; }
  static Term Const(std::string name) {
    return {Kind::kConst, std::move(name)};
  }
  bool is_var() const { return kind == Kind::kVar; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool IsGround() const;
  GroundAtom ToGround() const;  // requires IsGround()
  static Atom FromGround(const GroundAtom& atom);

  auto operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;
};

struct Clause {
  Atom head;
  std::vector<Atom> body;

  bool IsFact() const { return body.empty() && head.IsGround(); }
  auto operator<=>(const Clause&) const = default;
  bool operator==(const Clause&) const = default;
};

bool IsRangeRestricted(const Clause& clause);

// Prolog-style rendering: `p(a, B)`, `h :- b1, b2.`
std::string ToString(const Atom& atom);
std::string ToString(const Clause& clause);

// CamelCase identifier to a lowercase snake atom: Rock -> rock,
// ParticipateIn -> participate_in.
std::string MangleIdentifier(std::string_view identifier);

// Free text to an atom: "Alice Smith" -> alice_smith. Returns "" when no
// letters or digits are left.
std::string Slugify(std::string_view text);

// Names on the clause side of the translation and their L4 origins.
class SymbolTable {
 public:
  static SymbolTable Build(const NormalizedProgram& program);

  // L4 name -> clause name.
  std::string PredicateName(std::string_view l4_name) const;
  std::string ConstantName(std::string_view l4_name) const;
  std::string MembershipPredicate(std::string_view class_name) const;

  // Clause name -> L4 declaration. Null when unknown.
  const NormalizedPredicate* Predicate(std::string_view name) const;
  // Declared (enumerated) constant -> its class.
  std::optional<std::string> ClassOfConstant(std::string_view name) const;
  std::optional<std::string> SourceConstant(std::string_view name) const;

  // Clause constants of a class, declaration order.
  std::vector<std::string> ConstantsOf(std::string_view class_name) const;

 private:
  std::map<std::string, std::string, std::less<>> pred_to_asp_;
  std::map<std::string, NormalizedPredicate, std::less<>> asp_to_pred_;
  std::map<std::string, std::string, std::less<>> const_to_asp_;
  std::map<std::string, std::pair<std::string, std::string>, std::less<>>
      asp_to_const_;  // clause name -> (L4 name, class)
  std::map<std::string, std::vector<std::string>, std::less<>> class_consts_;
  std::map<std::string, std::string, std::less<>> membership_;
};

struct CompiledProgram {
  NormalizedProgram program;
  SymbolTable symbols;
  // Facts in program order, then membership facts of declared constants
  // that some rule body needs, then rules in source order.
  std::vector<Clause> clauses;
};

// Each rule becomes one clause. Conjunctions flatten into body atoms;
// head variables and existentially bound variables get class-membership
// atoms, placed first. Throws Error(kNonRangeRestricted).
CompiledProgram Compile(NormalizedProgram program);

struct QuerySpec {
  struct FreeArg {
    size_t position = 0;
    std::string name;  // Prolog variable, derived from the class name
    bool operator==(const FreeArg&) const = default;
  };

  std::string predicate;
  size_t arity = 0;
  std::map<size_t, std::string> bound;
  std::vector<FreeArg> free;

  bool Matches(const GroundAtom& atom) const;
  bool operator==(const QuerySpec&) const = default;
};

// `goal` may be the L4 or the clause name. Positions not in `bound` become
// free variables. Throws Error(kUnknownGoal).
QuerySpec MakeQuery(const CompiledProgram& compiled, std::string_view goal,
                    std::map<size_t, std::string> bound = {});

std::string ToString(const QuerySpec& query);  // `?- win(Game, Player).`

struct ScaspExport {
  std::string text;
  std::vector<std::string> warnings;
};

// One clause per line: facts, then rules, then the query. LF endings.
ScaspExport ExportScasp(const std::vector<Clause>& clauses,
                        const QuerySpec& query);

}  // namespace l4

#endif  // L4_ASP_H_
