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

#include <random>

#include "l4/asp.h"
#include "l4/frontend.h"
#include "l4/pipeline.h"
#include "../support/fixtures.h"
#include "../support/oracles.h"
#include "../support/random_program.h"

namespace l4 {
namespace {

TEST(MangleTest, Identifiers) {
  EXPECT_EQ(MangleIdentifier("Rock"), "rock");
  EXPECT_EQ(MangleIdentifier("BeatsPaper"), "beats_paper");
  EXPECT_EQ(MangleIdentifier("beats_paper"), "beats_paper");
  EXPECT_EQ(MangleIdentifier("Game2"), "game2");
  EXPECT_EQ(MangleIdentifier("_x"), "c_x");
}

TEST(MangleTest, Slugs) {
  EXPECT_EQ(Slugify("Alice Smith"), "alice_smith");
  EXPECT_EQ(Slugify("  x--y "), "x_y");
  EXPECT_EQ(Slugify("123"), "c_123");
}

TEST(CompileTest, WinnerRuleIsRangeRestricted) {
  LoadedProgram lp = testing::LoadFixture("rps.l4");
  ASSERT_EQ(lp.compiled.clauses.size(), 4u);
  const Clause& rule = lp.compiled.clauses.back();
  EXPECT_TRUE(IsRangeRestricted(rule));
  EXPECT_EQ(ToString(rule),
            "win(G, A) :- game(G), player(A), player(B), participate(G, A), "
            "participate(G, B), throw(A, R), throw(B, S), beat(R, S).");
  EXPECT_EQ(ToString(lp.compiled.clauses[0]), "beat(rock, scissors).");
  EXPECT_TRUE(lp.compiled.clauses[0].IsFact());
}

TEST(CompileTest, StandaloneEncodingSwapsArguments) {
  LoadedProgram lp = testing::LoadFixture("rps_standalone.l4");
  EXPECT_EQ(ToString(lp.compiled.clauses.back()),
            "win(A, G) :- player(A), game(G), player(B), participate(A, G), "
            "participate(B, G), throw(A, R), throw(B, S), beat(R, S).");
}

TEST(CompileTest, NonRangeRestrictedClauseIsDetected) {
  Clause c{{"p", {Term::Var("X")}}, {{"q", {Term::Var("Y")}}}};
  EXPECT_FALSE(IsRangeRestricted(c));
  Clause d{{"p", {Term::Var("X")}}, {{"q", {Term::Var("X"), Term::Const("a")}}}};
  EXPECT_TRUE(IsRangeRestricted(d));
}

TEST(SymbolTableTest, MapsBothWays) {
  LoadedProgram lp = testing::LoadFixture("rps.l4");
  const SymbolTable& s = lp.compiled.symbols;
  EXPECT_EQ(s.PredicateName("Beat"), "beat");
  EXPECT_EQ(s.ConstantName("Scissors"), "scissors");
  EXPECT_EQ(s.MembershipPredicate("Player"), "player");
  EXPECT_EQ(s.SourceConstant("rock"), "Rock");
  EXPECT_EQ(s.ClassOfConstant("paper"), "Sign");
  EXPECT_EQ(s.ConstantsOf("Sign"),
            (std::vector<std::string>{"rock", "paper", "scissors"}));
  ASSERT_NE(s.Predicate("participate"), nullptr);
  EXPECT_EQ(s.Predicate("participate")->origin, PredicateOrigin::kField);
}

TEST(QueryTest, FreeAndBoundArguments) {
  LoadedProgram lp = testing::LoadFixture("rps.l4");
  QuerySpec q = MakeQuery(lp.compiled, "win");
  EXPECT_EQ(ToString(q), "?- win(Game, Player).");
  ASSERT_EQ(q.free.size(), 2u);
  EXPECT_TRUE(q.Matches({"win", {"rps", "alice"}}));
  EXPECT_FALSE(q.Matches({"beat", {"rps", "alice"}}));
  QuerySpec bound = MakeQuery(lp.compiled, "win", {{1, "alice"}});
  EXPECT_EQ(ToString(bound), "?- win(Game, alice).");
  EXPECT_FALSE(bound.Matches({"win", {"rps", "bob"}}));
  EXPECT_THROW(MakeQuery(lp.compiled, "nope"), Error);
}

TEST(QueryTest, BindGoalFromWhereClauses) {
  LoadedProgram lp = testing::LoadFixture("rps.l4");
  auto b = BindGoal(lp.compiled, "win", std::vector<std::string>{"Player=Alice"});
  EXPECT_EQ(b, (std::map<size_t, std::string>{{1, "alice"}}));
  EXPECT_THROW(BindGoal(lp.compiled, "win", std::vector<std::string>{"Sign=rock"}),
               Error);
  EXPECT_THROW(BindGoal(lp.compiled, "win", std::vector<std::string>{"Player"}),
               Error);
}

TEST(ExportTest, EndsWithTheQueryAndParses) {
  for (testing::Encoding e :
       {testing::Encoding::kFields, testing::Encoding::kStandalone}) {
    LoadedProgram lp = testing::LoadFixture(testing::FixtureName(e));
    ScaspExport ex = ExportScasp(lp.compiled.clauses, MakeQuery(lp.compiled, "win"));
    EXPECT_TRUE(ex.warnings.empty());
    std::string last = ex.text.substr(ex.text.rfind('\n', ex.text.size() - 2) + 1);
    EXPECT_EQ(last, e == testing::Encoding::kFields
                        ? "?- win(Game, Player).\n"
                        : "?- win(Player, Game).\n");
    EXPECT_EQ(testing::CheckPrologClauses(ex.text), std::nullopt) << ex.text;
    EXPECT_EQ(ExportScasp(lp.compiled.clauses, MakeQuery(lp.compiled, "win")).text,
              ex.text);
  }
}

TEST(OracleSelfTest, PrologCheckerRejectsBrokenText) {
  EXPECT_EQ(testing::CheckPrologClauses("a(b).\n?- a(X).\n"), std::nullopt);
  EXPECT_NE(testing::CheckPrologClauses("a(X).\n?- a(X).\n"), std::nullopt);
  EXPECT_NE(testing::CheckPrologClauses("a(b)\n?- a(X).\n"), std::nullopt);
  EXPECT_NE(testing::CheckPrologClauses("a(b).\n"), std::nullopt);
  EXPECT_NE(testing::CheckPrologClauses("a(b) :- .\n?- a(X).\n"), std::nullopt);
  EXPECT_NE(testing::CheckPrologClauses("?- a(X).\n?- a(Y).\n"), std::nullopt);
}

TEST(ExportTest, RandomProgramsExportValidClauses) {
  std::mt19937 rng(3);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    SourceProgram src = testing::RandomProgram(rng);
    NormalizeResult n = Normalize(src);
    ASSERT_TRUE(n.ok()) << PrettyPrint(src);
    ASSERT_TRUE(TypeCheck(n.program).empty()) << PrettyPrint(src);
    CompiledProgram c = Compile(n.program);
    for (const Clause& cl : c.clauses) {
      ASSERT_TRUE(IsRangeRestricted(cl)) << ToString(cl);
    }
    for (const auto& rule : c.program.rules) {
      QuerySpec q = MakeQuery(c, rule.conclusion.name);
      ScaspExport ex = ExportScasp(c.clauses, q);
      ASSERT_EQ(testing::CheckPrologClauses(ex.text), std::nullopt) << ex.text;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace l4
