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

#include <gtest/gtest.h>

#include <algorithm>

#include "l4/frontend.h"
#include "l4/sem.h"
#include "../support/fixtures.h"

namespace l4 {
namespace {

NormalizedProgram NormalizeOk(const std::string& text) {
  ParseResult p = Parse(text);
  EXPECT_TRUE(p.ok()) << FormatDiagnostics(p.diagnostics, "src");
  NormalizeResult n = Normalize(p.program);
  EXPECT_TRUE(n.ok()) << FormatDiagnostics(n.diagnostics, "src");
  return n.program;
}

std::vector<DiagCode> CodesOf(const std::string& text) {
  ParseResult p = Parse(text);
  EXPECT_TRUE(p.ok()) << FormatDiagnostics(p.diagnostics, "src");
  NormalizeResult n = Normalize(p.program);
  std::vector<Diagnostic> d = n.diagnostics;
  if (n.ok()) d = TypeCheck(n.program);
  std::vector<DiagCode> codes;
  for (const auto& x : d) codes.push_back(x.code);
  return codes;
}

TEST(NormalizeTest, FieldsGainTheirOwnerAsFirstArgument) {
  NormalizedProgram p = NormalizeOk(testing::ReadProgram("rps.l4"));
  const NormalizedPredicate* part = p.FindPredicate("participate");
  ASSERT_NE(part, nullptr);
  EXPECT_EQ(part->origin, PredicateOrigin::kField);
  EXPECT_EQ(part->owner, "Game");
  EXPECT_EQ(part->arg_classes, (std::vector<std::string>{"Game", "Player"}));
  const NormalizedPredicate* thr = p.FindPredicate("throw");
  ASSERT_NE(thr, nullptr);
  EXPECT_EQ(thr->arg_classes, (std::vector<std::string>{"Player", "Sign"}));
  const NormalizedPredicate* beat = p.FindPredicate("Beat");
  ASSERT_NE(beat, nullptr);
  EXPECT_EQ(beat->origin, PredicateOrigin::kStandalone);
}

TEST(NormalizeTest, MembershipPredicatesAndEnumeration) {
  NormalizedProgram p = NormalizeOk(testing::ReadProgram("rps.l4"));
  for (const char* c : {"Player", "Game", "Sign"}) {
    const NormalizedPredicate* m = p.MembershipOf(c);
    ASSERT_NE(m, nullptr) << c;
    EXPECT_EQ(m->origin, PredicateOrigin::kMembership);
    EXPECT_EQ(m->arg_classes, std::vector<std::string>{c});
  }
  const ClassInfo* sign = p.FindClass("Sign");
  ASSERT_NE(sign, nullptr);
  EXPECT_TRUE(sign->is_enumerated);
  EXPECT_EQ(sign->constants,
            (std::vector<std::string>{"Rock", "Paper", "Scissors"}));
  EXPECT_FALSE(p.FindClass("Player")->is_enumerated);
  EXPECT_EQ(p.ClassOfConstant("Paper"), "Sign");
  EXPECT_EQ(p.ClassOfConstant("Alice"), std::nullopt);
}

TEST(NormalizeTest, BodylessRulesBecomeFacts) {
  NormalizedProgram p = NormalizeOk(testing::ReadProgram("rps.l4"));
  ASSERT_EQ(p.facts.size(), 3u);
  EXPECT_EQ(p.facts[0], (GroundAtom{"Beat", {"Rock", "Scissors"}}));
  EXPECT_EQ(p.facts[2], (GroundAtom{"Beat", {"Paper", "Rock"}}));
  ASSERT_EQ(p.rules.size(), 1u);
  EXPECT_EQ(p.rules[0].name, "winner");
  EXPECT_TRUE(p.HasDefiningRule("win"));
  EXPECT_FALSE(p.HasDefiningRule("throw"));
  EXPECT_TRUE(p.HasFacts("Beat"));
}

TEST(NormalizeTest, EncodingsAgreeUpToArgumentOrder) {
  NormalizedProgram a = NormalizeOk(testing::ReadProgram("rps.l4"));
  NormalizedProgram b = NormalizeOk(testing::ReadProgram("rps_standalone.l4"));
  EXPECT_EQ(a.classes.size(), b.classes.size());
  EXPECT_EQ(a.facts.size(), b.facts.size());
  EXPECT_TRUE(TypeCheck(a).empty());
  EXPECT_TRUE(TypeCheck(b).empty());
}

TEST(NormalizeTest, LowerRoundTrips) {
  for (const char* name : {"rps.l4", "rps_standalone.l4"}) {
    NormalizedProgram p = NormalizeOk(testing::ReadProgram(name));
    NormalizeResult again = Normalize(Lower(p));
    ASSERT_TRUE(again.ok()) << name;
    EXPECT_EQ(again.program, p) << name;
  }
}

TEST(AskableTest, ExcludesRuleDefinedAndFactBackedPredicates) {
  NormalizedProgram p = NormalizeOk(testing::ReadProgram("rps.l4"));
  std::vector<std::string> names;
  for (const auto& q : AskablePredicates(p, "win")) names.push_back(q.name);
  EXPECT_NE(std::find(names.begin(), names.end(), "participate"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "throw"), names.end());
  EXPECT_EQ(std::find(names.begin(), names.end(), "win"), names.end());
  EXPECT_EQ(std::find(names.begin(), names.end(), "Beat"), names.end());
  EXPECT_TRUE(AskablePredicates(p, "Beat").empty());
}

TEST(TypeCheckTest, ReportsDuplicates) {
  EXPECT_EQ(CodesOf("class\n  A\n  A\n"),
            std::vector<DiagCode>{DiagCode::kDuplicateClass});
  EXPECT_EQ(CodesOf("class\n  A\ndecl\n  X : A\n  X : A\n"),
            std::vector<DiagCode>{DiagCode::kDuplicateConstant});
  EXPECT_EQ(CodesOf("class\n  A { f : A → Bool, f : A → Bool }\n"),
            std::vector<DiagCode>{DiagCode::kDuplicateField});
}

TEST(TypeCheckTest, ReportsUnknownNames) {
  auto unknown_class = CodesOf("decl\n  X : Missing\n");
  ASSERT_FALSE(unknown_class.empty());
  EXPECT_EQ(unknown_class[0], DiagCode::kUnknownClass);
  auto unknown_pred = CodesOf(
      "class\n  A\nrule <r>\n  for a : A\n  if Q a\n  then Q a\n");
  ASSERT_FALSE(unknown_pred.empty());
  EXPECT_EQ(unknown_pred[0], DiagCode::kUnknownPredicate);
}

TEST(TypeCheckTest, ReportsArityAndClassMismatch) {
  const std::string decls =
      "class\n  A\n  B\ndecl\n  P : A → Bool\n  X : B\n";
  auto arity = CodesOf(decls + "rule <r>\n  for a : A\n  if P a a\n  then P a\n");
  ASSERT_FALSE(arity.empty());
  EXPECT_EQ(arity[0], DiagCode::kArityMismatch);
  auto cls = CodesOf(decls + "rule <r>\n  for b : B\n  if P b\n  then P b\n");
  ASSERT_FALSE(cls.empty());
  EXPECT_EQ(cls[0], DiagCode::kClassMismatch);
  auto konst = CodesOf(decls + "rule <r>\n  then P X\n");
  ASSERT_FALSE(konst.empty());
  EXPECT_EQ(konst[0], DiagCode::kClassMismatch);
}

TEST(TypeCheckTest, ReportsUnboundHeadVariable) {
  auto codes = CodesOf(
      "class\n  A\ndecl\n  P : A → Bool\n  Q : A → A → Bool\n"
      "rule <r>\n  for a : A\n  if P a\n  then Q a c\n");
  ASSERT_FALSE(codes.empty());
  EXPECT_EQ(codes[0], DiagCode::kUnboundVariable);
}

TEST(TypeCheckTest, DiagnosticsPointAtTheOffendingLine) {
  ParseResult p = Parse("class\n  A\n\ndecl\n  X : Nope\n");
  NormalizeResult n = Normalize(p.program);
  std::vector<Diagnostic> d = n.ok() ? TypeCheck(n.program) : n.diagnostics;
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d[0].span.line, 5);
  EXPECT_NE(d[0].Format("f.l4").find("f.l4:5:"), std::string::npos);
}

TEST(FlattenAtomsTest, WalksConjunctionsAndExists) {
  ParseResult p = Parse(testing::ReadProgram("rps.l4"));
  NormalizeResult n = Normalize(p.program);
  auto atoms = FlattenAtoms(*n.program.rules[0].condition);
  ASSERT_EQ(atoms.size(), 5u);
  EXPECT_EQ(atoms[0]->name, "participate");
  EXPECT_EQ(atoms[4]->name, "Beat");
}

}  // namespace
}  // namespace l4
