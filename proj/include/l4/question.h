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

#ifndef L4_QUESTION_H_
#define L4_QUESTION_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace l4 {

enum class QuestionKind {
  kExistence,  // "Is there a game?"
  kPolar,      // "Does Alice play?"
  kWhOpen,     // free text, with a "more?" loop
  kWhEnum,     // one of a closed list of constants
};

std::string_view QuestionKindName(QuestionKind kind);
std::optional<QuestionKind> ParseQuestionKind(std::string_view name);

// A template question is asked once per instance of `for_each`, with the
// instance bound at `bind_arg`.
struct Expansion {
  std::string for_each;
  size_t bind_arg = 0;
  bool operator==(const Expansion&) const = default;
};

struct Question {
  std::string id;
  QuestionKind kind = QuestionKind::kExistence;
  std::string predicate;  // clause-level predicate name
  // Existence: the class asked about. Otherwise the class of asked_arg.
  std::string class_name;
  std::map<size_t, std::string> fixed_args;
  size_t asked_arg = 0;
  std::optional<std::vector<std::string>> options;
  std::optional<std::string> loop_prompt;
  std::string prompt;
  // Existence only: many instances ("Are there any players?") rather than
  // one ("Is there a game?").
  bool plural = false;
  std::optional<Expansion> expansion;
  std::vector<std::string> links;

  bool operator==(const Question&) const = default;
};

}  // namespace l4

#endif  // L4_QUESTION_H_
