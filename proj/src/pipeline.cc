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

#include "l4/pipeline.h"

#include "l4/diagnostic.h"
#include "l4/sem.h"

namespace l4 {

LoadedProgram LoadProgram(std::string_view text, const MorphLexicon& morph) {
  ParseResult parsed = Parse(text);
  if (!parsed.ok()) {
    throw Error(ErrorCode::kDiagnostics, "syntax errors", parsed.diagnostics);
  }
  NormalizeResult normalized = Normalize(parsed.program);
  if (!normalized.ok()) {
    throw Error(ErrorCode::kDiagnostics, "declaration errors",
                normalized.diagnostics);
  }
  std::vector<Diagnostic> diags = TypeCheck(normalized.program);
  if (!diags.empty()) {
    throw Error(ErrorCode::kDiagnostics, "type errors", diags);
  }
  Lexicon lexicon = Lexicon::Build(normalized.program, morph, &diags);
  if (!diags.empty()) {
    throw Error(ErrorCode::kDiagnostics, "lexicon errors", diags);
  }
  CompiledProgram compiled = Compile(std::move(normalized.program));
  return {std::move(parsed.program), std::move(compiled), std::move(lexicon)};
}

std::map<size_t, std::string> BindGoal(
    const CompiledProgram& compiled, std::string_view goal,
    const std::map<std::string, std::string>& where) {
  QuerySpec q = MakeQuery(compiled, goal);
  const NormalizedPredicate* pred = compiled.symbols.Predicate(q.predicate);
  std::map<size_t, std::string> bound;
  for (const auto& [cls, value] : where) {
    bool placed = false;
    for (size_t i = 0; i < pred->arity() && !placed; ++i) {
      if (pred->arg_classes[i] == cls && bound.count(i) == 0) {
        bound[i] = compiled.program.ClassOfConstant(value)
                       ? compiled.symbols.ConstantName(value)
                       : Slugify(value);
        placed = true;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::kInvalidArgument,
                  "goal '" + std::string(goal) + "' has no argument of class " +
                      cls);
    }
  }
  return bound;
}

std::map<size_t, std::string> BindGoal(const CompiledProgram& compiled,
                                       std::string_view goal,
                                       const std::vector<std::string>& where) {
  std::map<std::string, std::string> pairs;
  for (const auto& w : where) {
    size_t eq = w.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == w.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "expected Class=constant, got '" + w + "'");
    }
    pairs[w.substr(0, eq)] = w.substr(eq + 1);
  }
  return BindGoal(compiled, goal, pairs);
}

Artifacts MakeArtifacts(const CompiledProgram& compiled,
                        const QuestionPlan& plan) {
  return {EmitLexsis(plan), ExportScasp(compiled.clauses, plan.goal).text,
          InterviewJson(plan)};
}

std::string Basename(std::string_view path) {
  size_t slash = path.find_last_of('/');
  return std::string(slash == std::string::npos ? path
                                                : path.substr(slash + 1));
}

}  // namespace l4
