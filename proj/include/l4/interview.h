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

// Question plans, LEXSIS documents and interview sessions.

#ifndef L4_INTERVIEW_H_
#define L4_INTERVIEW_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "l4/asp.h"
#include "l4/lexicon.h"
#include "l4/question.h"
#include "l4/realizer.h"
#include "l4/reasoner.h"

namespace l4 {

struct InterviewConfig {
  // Display name of the instance an existence "yes" introduces, per class:
  // {"Game": "RPS"}. Unconfigured classes get `<class>1`.
  std::map<std::string, std::string> instances;

  // {"instances": {...}}. Throws Error(kInvalidArgument).
  static InterviewConfig FromJson(std::string_view text);
  bool operator==(const InterviewConfig&) const = default;
};

struct QuestionPlan {
  std::string source;     // program file name, informational
  std::string goal_name;  // as written in the program
  QuerySpec goal;
  // Templates in asking order. Questions with an expansion are asked once
  // per instance of the expansion class.
  std::vector<Question> questions;

  bool empty() const { return questions.empty(); }
  bool operator==(const QuestionPlan&) const = default;
};

// Existence question for the goal's first argument class, then one
// question per askable relation, each bound to a class that is already
// introduced. Prompts are realized in plan order.
// Throws Error(kNoRuleForGoal), Error(kUnknownGoal), Error(kUnsupported).
QuestionPlan BuildPlan(const CompiledProgram& compiled, const QuerySpec& goal,
                       const Lexicon& lexicon, std::string source = {});

std::string EmitLexsis(const QuestionPlan& plan);
// Throws Error(kInvalidArgument) on a malformed or unversioned document.
QuestionPlan LoadLexsis(std::string_view yaml);

// The plan as the UI consumes it.
std::string InterviewJson(const QuestionPlan& plan);

// One question with its input schema: yes_no, free_text (with the loop
// prompt) or enum (with the options).
nlohmann::ordered_json QuestionToJson(const Question& question);

struct AnswerValue {
  std::string value;
  // WhOpen only: whether another answer to the same question follows.
  std::optional<bool> more;
  bool operator==(const AnswerValue&) const = default;
};

struct AnswerRecord {
  std::string question_id;
  std::string prompt;
  AnswerValue answer;
  bool operator==(const AnswerRecord&) const = default;
};

struct Session {
  std::string id;
  std::vector<AnswerRecord> answered;
  FactBase facts;
  std::map<std::string, std::vector<std::string>> introduced;
  std::optional<Question> pending;
  bool concluded = false;
  std::vector<AnswerSet> answer_sets;
  RealizedText conclusion;

  // Position in the plan: template, instance of its expansion, and loop
  // round of a WhOpen question.
  size_t template_index = 0;
  size_t instance_index = 0;
  size_t round = 1;

  bool operator==(const Session&) const = default;
};

class Interview {
 public:
  Interview(CompiledProgram compiled, Lexicon lexicon, QuestionPlan plan,
            InterviewConfig config = {});

  Session Start(std::string id) const;

  // Throws Error(kWrongQuestion) when `question_id` is not pending,
  // Error(kInvalidOption) when the value does not fit the question, and
  // Error(kDuplicateConstant) when a name is entered twice.
  Session Ingest(Session session, std::string_view question_id,
                 const AnswerValue& answer) const;

  // Replays an answer log from a fresh session.
  Session Replay(std::string id, const std::vector<AnswerRecord>& log) const;

  RealizerContext Context(const Session& session) const;

  const CompiledProgram& compiled() const { return compiled_; }
  const Lexicon& lexicon() const { return lexicon_; }
  const QuestionPlan& plan() const { return plan_; }
  const InterviewConfig& config() const { return config_; }

 private:
  void Advance(Session* session) const;
  void Conclude(Session* session) const;
  std::string Introduce(Session* session, const std::string& class_name,
                        const std::string& display) const;

  CompiledProgram compiled_;
  Lexicon lexicon_;
  QuestionPlan plan_;
  InterviewConfig config_;
  std::set<std::string> singletons_;
};

}  // namespace l4

#endif  // L4_INTERVIEW_H_
