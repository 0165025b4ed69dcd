// Copyright 2026 The cpkit Authors
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

// A small language for writing down morphisms.
//
//   script  := statement*
//   statement := "mor" NAME ":" obj "->" obj "=" expr ";"
//              | "show" expr ";"
//              | "check" expr "==" expr ";"
//   obj     := "I" | INT ("*" INT)*
//   expr    := expr ";" expr          diagrammatic order: left runs first
//            | expr "ox" expr         tensor, binds tighter than ";"
//            | ("dagger" | "conj" | "star") expr
//            | "id" INT | "swap" INT INT | "cup" INT | "cap" INT | "discard" INT
//            | NAME | "[" row (";" row)* "]" | "(" expr ")"
//   row     := entry ("," entry)*
//   entry   := complex literal such as 1, -0.5, 2i, -i, 1+2i, 0.5e-3-4i
//
// A ";" followed by "mor", "show", "check" or the end of input terminates the
// statement instead of continuing a composite. "#" starts a line comment.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cpkit/mor.hpp"

namespace cpkit::dsl {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class Builtin { Id, Swap, Cup, Cap, Discard };
enum class UnaryOp { Dagger, Conj, Star };
enum class BinaryOp { Compose, Tensor };

struct Literal {
  std::vector<std::vector<Complex>> rows;
};
struct BuiltinTerm {
  Builtin op;
  std::vector<std::size_t> dims;
};
struct NameRef {
  std::string name;
};
struct UnaryTerm {
  UnaryOp op;
  TermPtr arg;
};
/// For Compose, lhs runs first: "a ; b" means b o a.
struct BinaryTerm {
  BinaryOp op;
  TermPtr lhs;
  TermPtr rhs;
};

struct Term {
  std::variant<Literal, BuiltinTerm, NameRef, UnaryTerm, BinaryTerm> node;
  SourcePos pos;
};

/// Structural equality; source positions are ignored.
bool operator==(const Term &a, const Term &b);

struct Binding {
  std::string name;
  Object dom;
  Object cod;
  TermPtr body;
  SourcePos pos;
};
struct Show {
  TermPtr body;
  SourcePos pos;
};
struct Check {
  TermPtr lhs;
  TermPtr rhs;
  SourcePos pos;
};
using Statement = std::variant<Binding, Show, Check>;

struct Script {
  std::vector<Statement> statements;
};

bool operator==(const Script &a, const Script &b);

/// Throws SyntaxError with a 1-based line and column.
TermPtr parse_expr(std::string_view text);
Script parse_script(std::string_view text);

std::string print(const Term &t);
std::string print(const Script &s);

template <Scalar S>
using Env = std::map<std::string, Mor<S>>;

/// Evaluates by structural recursion. Throws UnknownIdentifier for unbound
/// names and TypeError, naming the offending subterm, for ill-typed composites
/// and literals that do not fit the semiring.
template <Scalar S>
Mor<S> eval(const Term &t, const Env<S> &env);

/// Evaluates the body of a binding and gives it the declared factor words.
template <Scalar S>
Mor<S> eval_binding(const Binding &b, const Env<S> &env);

}  // namespace cpkit::dsl
