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

// Source text to compiled program, and the generated artifacts.

#ifndef L4_PIPELINE_H_
#define L4_PIPELINE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "l4/asp.h"
#include "l4/frontend.h"
#include "l4/interview.h"
#include "l4/lexicon.h"

namespace l4 {

struct LoadedProgram {
  SourceProgram source;
  CompiledProgram compiled;
  Lexicon lexicon;
};

// Parses, normalizes, type-checks, builds the lexicon and compiles.
// Throws Error(kDiagnostics) carrying every diagnostic of the first
// failing stage.
LoadedProgram LoadProgram(std::string_view text,
                          const MorphLexicon& morph = DefaultMorphology());

// `Class=constant` bindings to goal positions: "Player=alice" binds the
// first argument of class Player. Throws Error(kInvalidArgument).
std::map<size_t, std::string> BindGoal(const CompiledProgram& compiled,
                                       std::string_view goal,
                                       const std::vector<std::string>& where);
std::map<size_t, std::string> BindGoal(
    const CompiledProgram& compiled, std::string_view goal,
    const std::map<std::string, std::string>& where);

struct Artifacts {
  std::string lexsis_yaml;
  std::string scasp_text;
  std::string interview_json;
};

Artifacts MakeArtifacts(const CompiledProgram& compiled,
                        const QuestionPlan& plan);

std::string Basename(std::string_view path);

}  // namespace l4

#endif  // L4_PIPELINE_H_
