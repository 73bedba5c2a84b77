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

#ifndef L4_DIAGNOSTIC_H_
#define L4_DIAGNOSTIC_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace l4 {

// 1-based line/column range. Columns count bytes.
struct Span {
  int line = 1;
  int column = 1;
  int end_line = 1;
  int end_column = 1;

  // Spans are diagnostic metadata; two AST nodes that differ only in where
  // they were written compare equal.
  friend bool operator==(const Span&, const Span&) { return true; }
};

enum class DiagCode {
  kSyntaxError,
  kDuplicateClass,
  kDuplicatePredicate,
  kDuplicateConstant,
  kDuplicateField,
  kUnknownClass,
  kUnknownPredicate,
  kUnknownSymbol,
  kUnsupportedType,
  kArityMismatch,
  kClassMismatch,
  kUnboundVariable,
  kDuplicateVariable,
  kSlotClassMismatch,
};

std::string_view DiagCodeName(DiagCode code);

struct Diagnostic {
  DiagCode code = DiagCode::kSyntaxError;
  Span span;
  std::string message;
  // Only filled for syntax errors.
  std::vector<std::string> expected;

  // `file:line:col: message`
  std::string Format(std::string_view file) const;
};

std::string FormatDiagnostics(const std::vector<Diagnostic>& diags,
                              std::string_view file);

// Error codes for pipeline failures that are not source diagnostics.
enum class ErrorCode {
  kInvalidArgument,
  kUnknownGoal,
  kNoRuleForGoal,
  kUnknownPredicate,
  kNonRangeRestricted,
  kOpenPredicateAlreadyGround,
  kUnsupported,
  kWrongQuestion,
  kInvalidOption,
  kDuplicateConstant,
  kEmptyAnswer,
  kNotFound,
  kDiagnostics,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message,
        std::vector<Diagnostic> diagnostics)
      : std::runtime_error(message),
        code_(code),
        diagnostics_(std::move(diagnostics)) {}

  ErrorCode code() const { return code_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  ErrorCode code_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace l4

#endif  // L4_DIAGNOSTIC_H_
