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

#include "l4/diagnostic.h"

namespace l4 {

std::string_view DiagCodeName(DiagCode code) {
  switch (code) {
    case DiagCode::kSyntaxError: return "SyntaxError";
    case DiagCode::kDuplicateClass: return "DuplicateClass";
    case DiagCode::kDuplicatePredicate: return "DuplicatePredicate";
    case DiagCode::kDuplicateConstant: return "DuplicateConstant";
    case DiagCode::kDuplicateField: return "DuplicateField";
    case DiagCode::kUnknownClass: return "UnknownClass";
    case DiagCode::kUnknownPredicate: return "UnknownPredicate";
    case DiagCode::kUnknownSymbol: return "UnknownSymbol";
    case DiagCode::kUnsupportedType: return "UnsupportedType";
    case DiagCode::kArityMismatch: return "ArityMismatch";
    case DiagCode::kClassMismatch: return "ClassMismatch";
    case DiagCode::kUnboundVariable: return "UnboundVariable";
    case DiagCode::kDuplicateVariable: return "DuplicateVariable";
    case DiagCode::kSlotClassMismatch: return "SlotClassMismatch";
  }
  return "Unknown";
}

std::string Diagnostic::Format(std::string_view file) const {
  return std::string(file) + ":" + std::to_string(span.line) + ":" +
         std::to_string(span.column) + ": " + message;
}

std::string FormatDiagnostics(const std::vector<Diagnostic>& diags,
                              std::string_view file) {
  std::string out;
  for (const auto& d : diags) out += d.Format(file) + "\n";
  return out;
}

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnknownGoal: return "UnknownGoal";
    case ErrorCode::kNoRuleForGoal: return "NoRuleForGoal";
    case ErrorCode::kUnknownPredicate: return "UnknownPredicate";
    case ErrorCode::kNonRangeRestricted: return "NonRangeRestricted";
    case ErrorCode::kOpenPredicateAlreadyGround:
      return "OpenPredicateAlreadyGround";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kWrongQuestion: return "WrongQuestion";
    case ErrorCode::kInvalidOption: return "InvalidOption";
    case ErrorCode::kDuplicateConstant: return "DuplicateConstant";
    case ErrorCode::kEmptyAnswer: return "EmptyAnswer";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kDiagnostics: return "Diagnostics";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace l4
