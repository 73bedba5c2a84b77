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

#ifndef L4_FRONTEND_H_
#define L4_FRONTEND_H_

#include <string>
#include <string_view>
#include <vector>

#include "l4/ast.h"
#include "l4/diagnostic.h"

namespace l4 {

struct ParseResult {
  SourceProgram program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Parses L4 source text.
//
// Layout: a block keyword (`class`, `decl`, `rule`, `lexicon`) at column 1
// opens a block. Entries are indented; an entry continues on following lines
// while they are indented deeper than its first line, or while a `{` of the
// entry is unclosed. `#` starts a comment that runs to the end of the line.
// `exists x : C .` scopes as far right as possible.
//
// Malformed input never throws: errors are reported as diagnostics and the
// parser skips to the next block. Blocks that failed to parse are omitted
// from `program`.
ParseResult Parse(std::string_view source);

// Canonical surface form. Parse(PrettyPrint(p)).program == p.
std::string PrettyPrint(const SourceProgram& program);

std::string PrettyPrint(const TypeExpr& type);
std::string PrettyPrint(const Expr& expr);

bool IsKeyword(std::string_view word);

}  // namespace l4

#endif  // L4_FRONTEND_H_
