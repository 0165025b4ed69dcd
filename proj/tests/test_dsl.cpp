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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "cpkit/compact.hpp"
#include "cpkit/dsl.hpp"
#include "cpkit/sampling.hpp"

using namespace cpkit;
using namespace cpkit::dsl;

namespace {

CMor ev(std::string_view text, const Env<Complex> &env = {}) { return eval<Complex>(*parse_expr(text), env); }

SourcePos syntax_error_at(std::string_view text) {
  try {
    parse_script(text);
  } catch (const SyntaxError &e) {
    return {e.line(), e.column()};
  }
  FAIL("no syntax error for: " << text);
  return {};
}

SourcePos expr_error_at(std::string_view text) {
  try {
    parse_expr(text);
  } catch (const SyntaxError &e) {
    return {e.line(), e.column()};
  }
  FAIL("no syntax error for: " << text);
  return {};
}

// Random syntax trees; they need not be well typed.
TermPtr random_term(std::mt19937_64 &rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 4);
  std::uniform_int_distribution<int> small(1, 3);
  const SourcePos at{};
  switch (pick(rng)) {
    case 0:
      return std::make_shared<const Term>(Term{BuiltinTerm{Builtin::Id, {std::size_t(small(rng))}}, at});
    case 1:
      return std::make_shared<const Term>(
          Term{BuiltinTerm{Builtin::Swap, {std::size_t(small(rng)), std::size_t(small(rng))}}, at});
    case 2:
      return std::make_shared<const Term>(Term{NameRef{"f"}, at});
    case 3: {
      std::uniform_real_distribution<double> u(-2.0, 2.0);
      Literal lit;
      const int rows = small(rng), cols = small(rng);
      for (int r = 0; r < rows; ++r) {
        lit.rows.emplace_back();
        for (int c = 0; c < cols; ++c) {
          const int kind = small(rng);
          lit.rows.back().push_back(kind == 1 ? Complex(u(rng), 0) : kind == 2 ? Complex(0, u(rng))
                                                                              : Complex(u(rng), u(rng)));
        }
      }
      return std::make_shared<const Term>(Term{lit, at});
    }
    case 4: {
      const Builtin b = small(rng) == 1 ? Builtin::Cup : small(rng) == 2 ? Builtin::Cap : Builtin::Discard;
      return std::make_shared<const Term>(Term{BuiltinTerm{b, {std::size_t(small(rng))}}, at});
    }
    case 5:
    case 6: {
      const UnaryOp op = small(rng) == 1 ? UnaryOp::Dagger : small(rng) == 2 ? UnaryOp::Conj : UnaryOp::Star;
      return std::make_shared<const Term>(Term{UnaryTerm{op, random_term(rng, depth - 1)}, at});
    }
    default: {
      const BinaryOp op = small(rng) == 1 ? BinaryOp::Tensor : BinaryOp::Compose;
      return std::make_shared<const Term>(
          Term{BinaryTerm{op, random_term(rng, depth - 1), random_term(rng, depth - 1)}, at});
    }
  }
}

}  // namespace

TEST_CASE("builtins evaluate to the library morphisms") {
  const TermPtr t = parse_expr("id 2");
  const auto *b = std::get_if<BuiltinTerm>(&t->node);
  REQUIRE(b);
  CHECK(b->op == Builtin::Id);
  CHECK(b->dims == std::vector<std::size_t>{2});
  CHECK(ev("id 2") == identity<Complex>(Object{2}));
  CHECK(ev("swap 2 2") == swap<Complex>(Object{2}, Object{2}));
  CHECK(ev("swap 2 3") == swap<Complex>(Object{2}, Object{3}));
  CHECK(ev("cup 3") == cup<Complex>(Object{3}));
  CHECK(ev("cap 3") == cap<Complex>(Object{3}));
  CHECK(ev("discard 2") == cap<Complex>(Object{2}));
}

TEST_CASE("malformed input reports positions") {
  const SourcePos p = expr_error_at("dagger (");
  CHECK(p.line == 1);
  CHECK(p.column == 9);
  CHECK(expr_error_at("id").column == 3);
  CHECK(expr_error_at("id 0").column == 4);
  CHECK(expr_error_at("[1, 2; 3]").column == 9);
  CHECK(expr_error_at("id 2 id 2").column == 6);
  CHECK(expr_error_at("id 2 $").column == 6);
  const SourcePos q = syntax_error_at("mor f : 2 -> 2 = id 2;\nshow f ox;\n");
  CHECK(q.line == 2);
  CHECK(q.column == 10);
  CHECK(syntax_error_at("mor f : 2 -> = id 2;").column == 14);
  CHECK(syntax_error_at("mor id : 2 -> 2 = id 2;").column == 5);
  CHECK(syntax_error_at("show id 2").column == 10);
}

TEST_CASE("composition is diagrammatic") {
  Sampler<Complex> s(91);
  const CMor f = s.mor(Object{2}, Object{3});
  const CMor g = s.mor(Object{3}, Object{4});
  const Env<Complex> env{{"f", f}, {"g", g}};
  CHECK(max_abs_diff(ev("f ; g", env), compose(g, f)) == 0.0);
  CHECK_THROWS_AS(ev("g ; f", env), TypeError);
  CHECK(max_abs_diff(ev("f ox g", env), tensor(f, g)) == 0.0);
  // ox binds tighter than ;.
  CHECK(max_abs_diff(ev("f ox id 1 ; g ox id 1", env), compose(g, f)) == 0.0);
}

TEST_CASE("eval examples") {
  Sampler<Complex> s(92);
  const CMor u = random_unitary(s, Object{3});
  CHECK(max_abs_diff(ev("(dagger u) ; u", {{"u", u}}), identity<Complex>(Object{3})) <= 1e-10);
  const CMor v = random_isometry(s, Object{2}, Object{3});
  CHECK(max_abs_diff(ev("v ; dagger v", {{"v", v}}), identity<Complex>(Object{2})) <= 1e-10);
  const CMor f = s.mor(Object{2}, Object{3});
  CHECK(ev("f ox id 1", {{"f", f}}) == f);
  CHECK_THROWS_AS(ev("id 2 ; id 3"), TypeError);
  CHECK_THROWS_AS(ev("h"), UnknownIdentifier);
}

TEST_CASE("type errors name the subterm") {
  try {
    ev("id 1 ox (id 2 ; id 3)");
    FAIL("expected a type error");
  } catch (const TypeError &e) {
    CHECK(std::string(e.what()).find("'id 2 ; id 3'") != std::string::npos);
    CHECK(std::string(e.what()).find("col 10") != std::string::npos);
  }
  try {
    ev("star id 4");
    FAIL("expected a type error");
  } catch (const TypeError &e) {
    CHECK(std::string(e.what()).find("'star id 4'") != std::string::npos);
  }
}

TEST_CASE("matrix literals") {
  const CMor m = ev("[1, -2.5; 2i, 1-i; -i, 0.5e1+3e-1i]");
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 2);
  CHECK(m(0, 0) == Complex(1, 0));
  CHECK(m(0, 1) == Complex(-2.5, 0));
  CHECK(m(1, 0) == Complex(0, 2));
  CHECK(m(1, 1) == Complex(1, -1));
  CHECK(m(2, 0) == Complex(0, -1));
  CHECK(m(2, 1) == Complex(5, 0.3));
  CHECK(ev("dagger [i]")(0, 0) == Complex(0, -1));
  CHECK(eval<Bool>(*parse_expr("[1, 0; 0, 1]"), {}) == identity<Bool>(Object{2}));
  CHECK_THROWS_AS(eval<Bool>(*parse_expr("[2]"), {}), TypeError);
}

TEST_CASE("star bends the first factor") {
  Sampler<Complex> s(93);
  const CMor f = s.mor(Object{2}, Object{3, 2});
  CHECK(ev("star f", {{"f", f}}) == conj_star(f, Object{3}, Object{2}));
  CHECK(ev("conj f", {{"f", f}}) == conj(f));
}

TEST_CASE("scripts bind, show and check") {
  const Script s = parse_script(
      "# a comment\n"
      "mor h : 2 -> 2 = [1, 1; 1, -1];\n"
      "mor b : I -> 2*2 = cup 2;\n"
      "show h ; h;\n"
      "check b ; h ox id 2 == b ; id 2 ox h;\n");
  REQUIRE(s.statements.size() == 4);
  const auto &b = std::get<Binding>(s.statements[1]);
  CHECK(b.name == "b");
  CHECK(b.dom == Object::unit());
  CHECK(b.cod == Object{2, 2});
  Env<Complex> env;
  env.emplace("h", eval_binding<Complex>(std::get<Binding>(s.statements[0]), env));
  const CMor hh = eval<Complex>(*std::get<Show>(s.statements[2]).body, env);
  CHECK(hh == scale(identity<Complex>(Object{2}), Complex(2.0)));
  Binding bad = std::get<Binding>(s.statements[0]);
  bad.cod = Object{3};
  CHECK_THROWS_AS(eval_binding<Complex>(bad, env), TypeError);
}

TEST_CASE("printing then parsing gives the same term") {
  for (const char *text : {"id 2", "swap 2 3 ; id 6", "dagger (f ; g)", "(f ; g) ox h", "f ; (g ; h)",
                           "f ox (g ox h)", "dagger dagger f", "star (f ox g)", "[1, 2i; -3-4i, 5e-20]",
                           "conj [0.1, -i]", "cup 2 ; cap 2", "discard 3 ox id 2"}) {
    const TermPtr t = parse_expr(text);
    const std::string printed = print(*t);
    CHECK(*parse_expr(printed) == *t);
    CHECK(print(*parse_expr(printed)) == printed);
  }
  CHECK(print(*parse_expr("(((id 2)))")) == "id 2");
  CHECK(print(*parse_expr("f ; g ; h")) == "f ; g ; h");
  CHECK(print(*parse_expr("f ; (g ; h)")) == "f ; (g ; h)");
}

TEST_CASE("print and parse round trip on random terms") {
  std::mt19937_64 rng(94);
  for (int t = 0; t < 500; ++t) {
    const TermPtr term = random_term(rng, 4);
    const std::string printed = print(*term);
    INFO(printed);
    CHECK(*parse_expr(printed) == *term);
  }
}

TEST_CASE("golden scripts round trip through the printer") {
  std::size_t seen = 0;
  for (const auto &entry : std::filesystem::directory_iterator(CPKIT_GOLDEN_DIR)) {
    if (entry.path().extension() != ".cps") {
      continue;
    }
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    Script script;
    try {
      script = parse_script(ss.str());
    } catch (const SyntaxError &) {
      continue;  // malformed members of the corpus
    }
    ++seen;
    INFO(entry.path().string());
    const Script again = parse_script(print(script));
    CHECK(again == script);
  }
  CHECK(seen >= 14);
}
