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

#include "l4/frontend.h"
#include "l4/pipeline.h"
#include "l4/reasoner.h"
#include "../support/fixtures.h"
#include "../support/oracles.h"
#include "../support/random_program.h"

namespace l4 {
namespace {

using testing::Encoding;

const std::vector<std::string> kSigns = {"rock", "paper", "scissors"};

// Hand-written game table: the winning sign for each ordered pair.
std::optional<std::string> RpsWinner(const std::string& a, const std::string& b) {
  if (a == b) return std::nullopt;
  static const std::map<std::string, std::string> beats = {
      {"rock", "scissors"}, {"scissors", "paper"}, {"paper", "rock"}};
  return beats.at(a) == b ? "alice" : "bob";
}

GroundAtom WinAtom(Encoding e, const std::string& player) {
  if (e == Encoding::kFields) return {"win", {"rps", player}};
  return {"win", {player, "rps"}};
}

TEST(FactsJsonTest, RoundTrip) {
  FactBase f = testing::RpsFacts(Encoding::kFields, "paper", "rock");
  FactBase back = FactsFromJson(FactsToJson(f));
  EXPECT_EQ(back, f);
  EXPECT_EQ(FactsFromJson(testing::ReadProgram("scenario.json")), f);
  EXPECT_THROW(FactsFromJson("{\"atoms\": 3}"), Error);
  EXPECT_THROW(FactsFromJson("not json"), Error);
}

TEST(ReasonerTest, AllNineThrowAssignments) {
  for (Encoding e : {Encoding::kFields, Encoding::kStandalone}) {
    LoadedProgram lp = testing::LoadFixture(testing::FixtureName(e));
    QuerySpec q = MakeQuery(lp.compiled, "win");
    int alice = 0, bob = 0, ties = 0;
    for (const auto& a : kSigns) {
      for (const auto& b : kSigns) {
        auto answers = Answer(lp.compiled.clauses, testing::RpsFacts(e, a, b), q);
        auto want = RpsWinner(a, b);
        if (!want) {
          EXPECT_TRUE(answers.empty()) << a << " " << b;
          ++ties;
          continue;
        }
        ASSERT_EQ(answers.size(), 1u) << a << " " << b;
        EXPECT_EQ(answers[0].conclusion, WinAtom(e, *want));
        (*want == "alice" ? alice : bob)++;
      }
    }
    EXPECT_EQ(alice, 3);
    EXPECT_EQ(bob, 3);
    EXPECT_EQ(ties, 3);
  }
}

TEST(ReasonerTest, SupportOfTheBecauseAnswer) {
  LoadedProgram lp = testing::LoadFixture("rps.l4");
  FactBase f = testing::RpsFacts(Encoding::kFields, "paper", "rock");
  auto answers = Answer(lp.compiled.clauses, f, MakeQuery(lp.compiled, "win"));
  ASSERT_EQ(answers.size(), 1u);
  const AnswerSet& a = answers[0];
  EXPECT_EQ(a.binding, (std::map<size_t, std::string>{{0, "rps"}, {1, "alice"}}));
  std::set<GroundAtom> support(a.support.begin(), a.support.end());
  EXPECT_TRUE(support.count({"throw", {"alice", "paper"}}));
  EXPECT_TRUE(support.count({"throw", {"bob", "rock"}}));
  EXPECT_TRUE(support.count({"beat", {"paper", "rock"}}));
  EXPECT_FALSE(support.count({"beat", {"rock", "scissors"}}));
  Model m = LeastModel(lp.compiled.clauses, f);
  EXPECT_TRUE(testing::SelfCertifies(lp.compiled.clauses, f, m, a.conclusion,
                                     a.support));
}

TEST(ReasonerTest, BoundQueryFiltersAnswers) {
  LoadedProgram lp = testing::LoadFixture("rps.l4");
  FactBase f = testing::RpsFacts(Encoding::kFields, "paper", "rock");
  EXPECT_EQ(Answer(lp.compiled.clauses, f,
                   MakeQuery(lp.compiled, "win", {{1, "bob"}}))
                .size(),
            0u);
  EXPECT_EQ(Answer(lp.compiled.clauses, f,
                   MakeQuery(lp.compiled, "win", {{1, "alice"}}))
                .size(),
            1u);
}

TEST(ReasonerTest, MissingParticipantBlocksTheRule) {
  LoadedProgram lp = testing::LoadFixture("rps.l4");
  FactBase f;
  f.Add({"game", {"rps"}});
  f.Add({"player", {"alice"}});
  f.Add({"participate", {"rps", "alice"}});
  f.Add({"throw", {"alice", "paper"}});
  EXPECT_TRUE(Answer(lp.compiled.clauses, f, MakeQuery(lp.compiled, "win")).empty());
}

TEST(ReasonerTest, MatchesNaiveClosureOnRandomPrograms) {
  std::mt19937 rng(20261014);
  testing::RandomProgramOptions opts;
  opts.max_constants = 10;
  for (int i = 0; i < 300; ++i) {
    SourceProgram src = testing::RandomProgram(rng, opts);
    NormalizeResult n = Normalize(src);
    ASSERT_TRUE(n.ok());
    CompiledProgram c = Compile(n.program);
    FactBase facts = testing::RandomFacts(rng, c);
    Model fast = LeastModel(c.clauses, facts);
    Model slow = testing::NaiveClosure(c.clauses, facts);
    ASSERT_EQ(fast, slow) << PrettyPrint(src) << FactsToJson(facts);
    for (const auto& rule : c.program.rules) {
      QuerySpec q = MakeQuery(c, rule.conclusion.name);
      for (const AnswerSet& a : Answer(c.clauses, facts, q)) {
        ASSERT_TRUE(slow.count(a.conclusion)) << ToString(a.conclusion);
        ASSERT_TRUE(testing::SelfCertifies(c.clauses, facts, slow, a.conclusion,
                                           a.support))
            << PrettyPrint(src) << ToString(a.conclusion);
      }
    }
  }
}

TEST(ReasonerTest, JustifyReturnsModelAtoms) {
  LoadedProgram lp = testing::LoadFixture("rps_standalone.l4");
  FactBase f = testing::RpsFacts(Encoding::kStandalone, "rock", "scissors");
  Model m = LeastModel(lp.compiled.clauses, f);
  auto j = Justify(lp.compiled.clauses, m, {"win", {"alice", "rps"}});
  for (const auto& a : j) EXPECT_TRUE(m.count(a)) << ToString(a);
  EXPECT_FALSE(j.empty());
}

TEST(HypotheticalTest, EnumeratesEveryThrowPair) {
  for (Encoding e : {Encoding::kFields, Encoding::kStandalone}) {
    LoadedProgram lp = testing::LoadFixture(testing::FixtureName(e));
    FactBase base = testing::RpsFacts(e);
    HypotheticalSpace space = MakeHypotheticalSpace(lp.compiled, base, "throw");
    EXPECT_EQ(space.chooser_arg, 1u);
    EXPECT_EQ(space.candidates, kSigns);
    EXPECT_EQ(space.instances.size(), 2u);
    auto sets = EnumerateHypotheticals(lp.compiled.clauses, base, space,
                                       MakeQuery(lp.compiled, "win"));
    std::set<std::pair<std::string, std::pair<std::string, std::string>>> got;
    for (const AnswerSet& s : sets) {
      std::string winner = e == Encoding::kFields ? s.conclusion.args[1]
                                                  : s.conclusion.args[0];
      std::string ta, tb;
      for (const auto& atom : s.support) {
        if (atom.predicate != "throw") continue;
        (atom.args[0] == "alice" ? ta : tb) = atom.args[1];
      }
      ASSERT_FALSE(ta.empty());
      ASSERT_FALSE(tb.empty());
      EXPECT_EQ(RpsWinner(ta, tb), winner);
      got.insert({winner, {ta, tb}});
    }
    EXPECT_EQ(got.size(), 6u);
    EXPECT_EQ(sets.size(), 6u);
  }
}

TEST(HypotheticalTest, AlreadyGroundPredicateIsRejected) {
  LoadedProgram lp = testing::LoadFixture("rps.l4");
  FactBase base = testing::RpsFacts(Encoding::kFields);
  HypotheticalSpace space = MakeHypotheticalSpace(lp.compiled, base, "throw");
  try {
    EnumerateHypotheticals(lp.compiled.clauses,
                           testing::RpsFacts(Encoding::kFields, "rock", "rock"),
                           space, MakeQuery(lp.compiled, "win"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOpenPredicateAlreadyGround);
  }
  EXPECT_THROW(MakeHypotheticalSpace(lp.compiled, base, "nope"), Error);
  EXPECT_THROW(MakeHypotheticalSpace(lp.compiled, base, "participate"), Error);
}

}  // namespace
}  // namespace l4
