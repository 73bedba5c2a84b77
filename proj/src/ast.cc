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

#include "l4/ast.h"

#include <utility>

namespace l4 {

TypeExpr TypeExpr::ClassRef(std::string name, Span span) {
  return {Kind::kClassRef, std::move(name), {}, span};
}

TypeExpr TypeExpr::Bool(Span span) { return {Kind::kBool, {}, {}, span}; }

TypeExpr TypeExpr::Arrow(TypeExpr argument, TypeExpr result, Span span) {
  TypeExpr t{Kind::kArrow, {}, {}, span};
  t.children.push_back(std::move(argument));
  t.children.push_back(std::move(result));
  return t;
}

bool TypeExpr::EndsInBool() const {
  const TypeExpr* t = this;
  while (t->kind == Kind::kArrow) t = &t->result();
  return t->kind == Kind::kBool;
}

Expr Expr::Apply(std::string predicate, std::vector<Expr> args, Span span) {
  return {Kind::kApply, std::move(predicate), {}, std::move(args), span};
}

Expr Expr::Var(std::string name, Span span) {
  return {Kind::kVar, std::move(name), {}, {}, span};
}

Expr Expr::Const(std::string name, Span span) {
  return {Kind::kConst, std::move(name), {}, {}, span};
}

Expr Expr::Conj(Expr left, Expr right, Span span) {
  Expr e{Kind::kConj, {}, {}, {}, span};
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  return e;
}

Expr Expr::Exists(std::string var, std::string class_name, Expr body,
                  Span span) {
  Expr e{Kind::kExists, std::move(var), std::move(class_name), {}, span};
  e.children.push_back(std::move(body));
  return e;
}

}  // namespace l4
