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

// Acceptance gate. Prints one PASS or FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "l4/frontend.h"
#include "l4/interview.h"
#include "l4/pipeline.h"
#include "l4/realizer.h"
#include "l4/reasoner.h"
#include "../support/fixtures.h"
#include "../support/oracles.h"
#include "../support/random_program.h"

namespace l4 {
namespace {

using testing::Encoding;

constexpr double kTimeBudgetSeconds = 10.0;
constexpr int kRandomPrograms = 200;
constexpr int kFuzzedPrograms = 100;
constexpr int kReplaySequences = 100;

const char kBecause[] =
    "Alice wins RPS, because\n"
    "- Alice throws paper and Bob throws rock, and\n"
    "- paper beats rock.";

const char kTable2[] =
    "Alice wins RPS, if all of the following hold:\n"
    "RPS is a game, and Alice and Bob are players and participate in RPS\n"
    "and one of the following holds:\n"
    "rock beats scissors, Alice throws rock and Bob throws scissors,\n"
    "scissors beats paper, Alice throws scissors and Bob throws paper, or\n"
    "paper beats rock, Alice throws paper and Bob throws rock.";

const std::vector<std::string> kSigns = {"rock", "paper", "scissors"};

// Collects the first failure of a criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '\n' ? std::string("\\n") : std::string(1, c);
  return out + "\"";
}

RealizerContext ContextFor(const LoadedProgram& lp, const FactBase& facts) {
  RealizerContext ctx;
  ctx.compiled = &lp.compiled;
  ctx.lexicon = &lp.lexicon;
  ctx.names = facts.names;
  return ctx;
}

size_t PlayerArg(Encoding e) { return e == Encoding::kFields ? 1 : 0; }

// Independent game table: who wins when Alice shows `a` and Bob shows `b`.
std::optional<std::string> TableWinner(const std::string& a, const std::string& b) {
  if (a == b) return std::nullopt;
  bool alice = (a == "rock" && b == "scissors") ||
               (a == "scissors" && b == "paper") ||
               (a == "paper" && b == "rock");
  return alice ? "alice" : "bob";
}

void RpsPipeline(Check* c) {
  std::map<std::pair<std::string, std::string>, std::set<std::string>> winners[2];
  for (Encoding e : {Encoding::kFields, Encoding::kStandalone}) {
    std::string text = testing::ReadProgram(testing::FixtureName(e));
    ParseResult parsed = Parse(text);
    c->Expect(parsed.ok(), std::string(testing::FixtureName(e)) + " does not parse");
    if (!parsed.ok()) return;
    NormalizeResult norm = Normalize(parsed.program);
    c->Expect(norm.ok(), "normalization failed");
    c->Expect(TypeCheck(norm.program).empty(), "type check failed");
    LoadedProgram lp = LoadProgram(text);
    QuerySpec q = MakeQuery(lp.compiled, "win");
    for (const auto& a : kSigns) {
      for (const auto& b : kSigns) {
        for (const AnswerSet& s :
             Answer(lp.compiled.clauses, testing::RpsFacts(e, a, b), q)) {
          winners[static_cast<int>(e)][{a, b}].insert(
              s.conclusion.args[PlayerArg(e)]);
        }
      }
    }
  }
  c->Expect(winners[0] == winners[1], "encodings disagree on a winner");
  c->Expect(winners[0].size() == 6, "expected six decisive throw pairs");
}

void InterviewGolden(Check* c) {
  LoadedProgram lp = testing::LoadFixture("rps.l4");
  QuestionPlan plan = BuildPlan(lp.compiled, MakeQuery(lp.compiled, "win"),
                                lp.lexicon, "rps.l4");
  Interview iv(lp.compiled, lp.lexicon, plan,
               InterviewConfig::FromJson(testing::ReadProgram("rps.config.json")));
  Session s = iv.Start("acceptance");
  std::vector<std::string> prompts;
  std::optional<std::vector<std::string>> options;
  const std::vector<AnswerValue> answers = {
      {"yes", {}}, {"Alice", true}, {"Bob", false}, {"paper", {}}, {"rock", {}}};
  for (const AnswerValue& a : answers) {
    if (!s.pending) break;
    if (prompts.empty() || prompts.back() != s.pending->prompt) {
      prompts.push_back(s.pending->prompt);
    }
    if (s.pending->kind == QuestionKind::kWhEnum) options = s.pending->options;
    s = iv.Ingest(s, s.pending->id, a);
  }
  const std::vector<std::string> want = {
      "Is there a game?", "Who participates in the game?",
      "Which sign does Alice throw?", "Which sign does Bob throw?"};
  for (size_t i = 0; i < want.size(); ++i) {
    c->Expect(i < prompts.size() && prompts[i] == want[i],
              "question " + std::to_string(i + 1) + ": got " +
                  (i < prompts.size() ? Quote(prompts[i]) : "nothing"));
  }
  c->Expect(prompts.size() == want.size(), "unexpected extra questions");
  c->Expect(options == kSigns, "sign options not in declaration order");
  c->Expect(s.concluded, "interview did not conclude");
}

void WhyGolden(Check* c) {
  for (Encoding e : {Encoding::kFields, Encoding::kStandalone}) {
    LoadedProgram lp = testing::LoadFixture(testing::FixtureName(e));
    FactBase f = testing::RpsFacts(e, "paper", "rock");
    auto sets = Answer(lp.compiled.clauses, f, MakeQuery(lp.compiled, "win"));
    c->Expect(sets.size() == 1, "expected exactly one answer set");
    std::string text = RealizeAnswers(sets, ContextFor(lp, f)).text;
    c->Expect(text == kBecause, std::string(testing::FixtureName(e)) + ": " + Quote(text));
  }
}

void Table2Golden(Check* c) {
  for (Encoding e : {Encoding::kFields, Encoding::kStandalone}) {
    LoadedProgram lp = testing::LoadFixture(testing::FixtureName(e));
    FactBase base = testing::RpsFacts(e);
    HypotheticalSpace space = MakeHypotheticalSpace(lp.compiled, base, "throw");
    QuerySpec q = MakeQuery(lp.compiled, "win", {{PlayerArg(e), "alice"}});
    auto sets = EnumerateHypotheticals(lp.compiled.clauses, base, space, q);
    c->Expect(sets.size() == 3, "expected 3 answer sets, got " +
                                    std::to_string(sets.size()));
    std::string text = RealizeAnswers(sets, ContextFor(lp, base)).text;
    c->Expect(text == kTable2, std::string(testing::FixtureName(e)) + ": " + Quote(text));

    int alice = 0, bob = 0, ties = 0;
    QuerySpec all = MakeQuery(lp.compiled, "win");
    for (const auto& a : kSigns) {
      for (const auto& b : kSigns) {
        auto got = Answer(lp.compiled.clauses, testing::RpsFacts(e, a, b), all);
        auto want = TableWinner(a, b);
        if (!want) {
          ++ties;
          c->Expect(got.empty(), "tie " + a + "/" + b + " has a winner");
          continue;
        }
        (*want == "alice" ? alice : bob)++;
        c->Expect(got.size() == 1 && got[0].conclusion.args[PlayerArg(e)] == *want,
                  "wrong winner for " + a + "/" + b);
      }
    }
    c->Expect(alice == 3 && bob == 3 && ties == 3, "oracle split is not 3/3/3");
    std::set<std::string> alice_throws;
    for (const AnswerSet& s : sets) {
      for (const GroundAtom& atom : s.support) {
        if (atom.predicate == "throw" && atom.args[0] == "alice") {
          alice_throws.insert(atom.args[1]);
        }
      }
    }
    c->Expect(alice_throws.size() == 3, "Alice's winning throws are not all distinct");
  }
}

void ReasonerOracle(Check* c) {
  std::mt19937 rng(4242);
  testing::RandomProgramOptions opts;
  opts.max_classes = 4;
  opts.max_constants = 20;
  opts.max_rules = 6;
  opts.max_arity = 2;
  size_t certified = 0;
  for (int i = 0; i < kRandomPrograms && c->ok(); ++i) {
    SourceProgram src = testing::RandomProgram(rng, opts);
    NormalizeResult n = Normalize(src);
    c->Expect(n.ok() && TypeCheck(n.program).empty(),
              "random program " + std::to_string(i) + " rejected");
    if (!n.ok()) return;
    CompiledProgram compiled = Compile(n.program);
    FactBase facts = testing::RandomFacts(rng, compiled);
    Model fast = LeastModel(compiled.clauses, facts);
    Model slow = testing::NaiveClosure(compiled.clauses, facts);
    c->Expect(fast == slow, "model mismatch on program " + std::to_string(i));
    for (const auto& rule : compiled.program.rules) {
      QuerySpec q = MakeQuery(compiled, rule.conclusion.name);
      for (const AnswerSet& a : Answer(compiled.clauses, facts, q)) {
        bool ok = testing::SelfCertifies(compiled.clauses, facts, slow,
                                         a.conclusion, a.support);
        c->Expect(ok, "support of " + ToString(a.conclusion) + " does not certify");
        certified += ok;
      }
    }
  }
  c->Expect(certified > 0, "no answer sets were produced");
}

void ScaspExportCheck(Check* c) {
  LoadedProgram lp = testing::LoadFixture("rps.l4");
  QuerySpec q = MakeQuery(lp.compiled, "win");
  std::string text = ExportScasp(lp.compiled.clauses, q).text;
  c->Expect(text.find("\n?- win(Game, Player).\n") != std::string::npos,
            "query line missing");
  auto err = testing::CheckPrologClauses(text);
  c->Expect(!err.has_value(), "grammar: " + err.value_or(""));
  for (int i = 0; i < 5; ++i) {
    LoadedProgram again = testing::LoadFixture("rps.l4");
    c->Expect(ExportScasp(again.compiled.clauses, MakeQuery(again.compiled, "win"))
                      .text == text,
              "export differs between runs");
  }
}

void RoundTrips(Check* c) {
  std::mt19937 rng(1717);
  testing::RandomProgramOptions opts;
  opts.surface_variety = true;
  for (int i = 0; i < kFuzzedPrograms && c->ok(); ++i) {
    SourceProgram p = testing::RandomProgram(rng, opts);
    std::string printed = PrettyPrint(p);
    ParseResult back = Parse(printed);
    c->Expect(back.ok() && back.program == p,
              "parse(print(p)) != p for fuzzed program " + std::to_string(i));
  }

  for (const char* f : {"rps.l4", "rps_standalone.l4"}) {
    LoadedProgram lp = testing::LoadFixture(f);
    QuestionPlan plan =
        BuildPlan(lp.compiled, MakeQuery(lp.compiled, "win"), lp.lexicon, f);
    std::string y = EmitLexsis(plan);
    c->Expect(EmitLexsis(LoadLexsis(y)) == y,
              std::string("LEXSIS emit/reload/emit differs for ") + f);
  }

  LoadedProgram lp = testing::LoadFixture("rps_standalone.l4");
  QuestionPlan plan =
      BuildPlan(lp.compiled, MakeQuery(lp.compiled, "win"), lp.lexicon, "rps");
  Interview iv(lp.compiled, lp.lexicon, plan,
               InterviewConfig::FromJson(testing::ReadProgram("rps.config.json")));
  const std::vector<std::string> names = {"Alice", "Bob", "Carol", "RPS", "Chess"};
  std::mt19937 arng(5150);
  for (int i = 0; i < kReplaySequences && c->ok(); ++i) {
    Session s = iv.Start("replay");
    for (int step = 0; step < 30 && s.pending; ++step) {
      const Question& q = *s.pending;
      AnswerValue a;
      if (q.options) {
        a.value = (*q.options)[arng() % q.options->size()];
      } else {
        a.value = names[arng() % names.size()];
        a.more = arng() % 2 == 0;
      }
      try {
        s = iv.Ingest(s, q.id, a);
      } catch (const Error&) {
      }
    }
    c->Expect(iv.Replay("replay", s.answered) == s,
              "replay diverged on sequence " + std::to_string(i));
  }
}

}  // namespace
}  // namespace l4

int main() {
  struct Criterion {
    const char* name;
    std::function<void(l4::Check*)> run;
  };
  const std::vector<Criterion> criteria = {
      {"rps-pipeline-encoding-invariance", l4::RpsPipeline},
      {"interview-golden", l4::InterviewGolden},
      {"why-answer-golden", l4::WhyGolden},
      {"table2-golden", l4::Table2Golden},
      {"reasoner-oracle-equivalence", l4::ReasonerOracle},
      {"scasp-export", l4::ScaspExportCheck},
      {"round-trips", l4::RoundTrips},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    l4::Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(&check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    check.Expect(secs <= l4::kTimeBudgetSeconds,
                 "took " + std::to_string(secs) + " s");
    if (check.ok()) {
      std::printf("PASS %s (%.2f s)\n", cr.name, secs);
    } else {
      ++failures;
      std::printf("FAIL %s: %s\n", cr.name, check.failure().c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
