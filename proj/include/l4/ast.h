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

// Abstract syntax of L4 source programs.

#ifndef L4_AST_H_
#define L4_AST_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "l4/diagnostic.h"

namespace l4 {

struct TypeExpr {
  enum class Kind { kClassRef, kBool, kArrow };

  Kind kind = Kind::kBool;
  std::string name;               // kClassRef only
  std::vector<TypeExpr> children; // kArrow: {argument, result}
  Span span;

  static TypeExpr ClassRef(std::string name, Span span = {});
  static TypeExpr Bool(Span span = {});
  static TypeExpr Arrow(TypeExpr argument, TypeExpr result, Span span = {});

  const TypeExpr& argument() const { return children[0]; }
  const TypeExpr& result() const { return children[1]; }
  bool EndsInBool() const;

  bool operator==(const TypeExpr&) const = default;
};

struct Expr {
  enum class Kind { kApply, kVar, kConst, kConj, kExists };

  Kind kind = Kind::kConst;
  // kApply: predicate; kVar/kConst: the name; kExists: bound variable.
  std::string name;
  std::string class_name;     // kExists only
  std::vector<Expr> children; // kApply: args; kConj: {left, right}; kExists: {body}
  Span span;

  static Expr Apply(std::string predicate, std::vector<Expr> args,
                    Span span = {});
  static Expr Var(std::string name, Span span = {});
  static Expr Const(std::string name, Span span = {});
  static Expr Conj(Expr left, Expr right, Span span = {});
  static Expr Exists(std::string var, std::string class_name, Expr body,
                     Span span = {});

  bool operator==(const Expr&) const = default;
};

struct FieldDecl {
  std::string name;
  TypeExpr type;
  Span span;
  bool operator==(const FieldDecl&) const = default;
};

struct ClassDecl {
  std::string name;
  std::vector<FieldDecl> fields;
  Span span;
  bool operator==(const ClassDecl&) const = default;
};

struct ValueDecl {
  std::string name;
  TypeExpr type;
  Span span;
  bool operator==(const ValueDecl&) const = default;
};

struct Binder {
  std::string var;
  std::string class_name;
  Span span;
  bool operator==(const Binder&) const = default;
};

struct RuleDecl {
  std::string name;
  std::vector<Binder> binders;
  std::optional<Expr> condition;
  Expr conclusion;
  Span span;

  bool operator==(const RuleDecl&) const = default;
};

struct LexiconDecl {
  std::string key;
  std::string surface;
  Span span;
  bool operator==(const LexiconDecl&) const = default;
};

struct ClassBlock {
  std::vector<ClassDecl> classes;
  Span span;
  bool operator==(const ClassBlock&) const = default;
};

struct DeclBlock {
  std::vector<ValueDecl> decls;
  Span span;
  bool operator==(const DeclBlock&) const = default;
};

struct RuleBlock {
  RuleDecl rule;
  Span span;
  bool operator==(const RuleBlock&) const = default;
};

struct LexiconBlock {
  std::vector<LexiconDecl> entries;
  Span span;
  bool operator==(const LexiconBlock&) const = default;
};

using Block = std::variant<ClassBlock, DeclBlock, RuleBlock, LexiconBlock>;

struct SourceProgram {
  std::vector<Block> blocks;
  bool operator==(const SourceProgram&) const = default;
};

}  // namespace l4

#endif  // L4_AST_H_
