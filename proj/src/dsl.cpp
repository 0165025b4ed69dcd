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

#include "cpkit/dsl.hpp"

#include <cctype>
#include <cstdlib>

#include "cpkit/compact.hpp"
#include "cpkit/format.hpp"

namespace cpkit::dsl {

namespace {

enum class Tok { Number, Imag, Ident, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
  double value = 0.0;  // Number and Imag
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const SourcePos pos{line_, col_};
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "end of input", pos});
        return out;
      }
      const char c = src_[i_];
      if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i_ + 1 < src_.size() &&
                                                          std::isdigit(static_cast<unsigned char>(src_[i_ + 1])))) {
        out.push_back(number(pos));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
          word.push_back(advance());
        }
        out.push_back({Tok::Ident, word, pos});
      } else if (c == '-' && peek(1) == '>') {
        advance();
        advance();
        out.push_back({Tok::Punct, "->", pos});
      } else if (c == '=' && peek(1) == '=') {
        advance();
        advance();
        out.push_back({Tok::Punct, "==", pos});
      } else if (std::string_view(":=;()[],*+-").find(c) != std::string_view::npos) {
        out.push_back({Tok::Punct, std::string(1, advance()), pos});
      } else {
        throw SyntaxError(pos.line, pos.column, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  char peek(std::size_t k) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }

  char advance() {
    const char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') {
          advance();
        }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  bool digit_at(std::size_t k) const { return std::isdigit(static_cast<unsigned char>(peek(k))) != 0; }

  Token number(SourcePos pos) {
    std::string s;
    while (digit_at(0)) {
      s.push_back(advance());
    }
    if (peek(0) == '.' && digit_at(1)) {
      s.push_back(advance());
      while (digit_at(0)) {
        s.push_back(advance());
      }
    }
    if ((peek(0) == 'e' || peek(0) == 'E') &&
        (digit_at(1) || ((peek(1) == '+' || peek(1) == '-') && digit_at(2)))) {
      s.push_back(advance());
      if (peek(0) == '+' || peek(0) == '-') {
        s.push_back(advance());
      }
      while (digit_at(0)) {
        s.push_back(advance());
      }
    }
    Token t{Tok::Number, s, pos, std::strtod(s.c_str(), nullptr)};
    if (peek(0) == 'i' && !std::isalnum(static_cast<unsigned char>(peek(1))) && peek(1) != '_') {
      advance();
      t.kind = Tok::Imag;
      t.text += 'i';
    }
    if (std::isalpha(static_cast<unsigned char>(peek(0))) || peek(0) == '_') {
      throw SyntaxError(line_, col_, "malformed number '" + s + "'");
    }
    return t;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool is_keyword(const std::string &w) {
  static const char *const kWords[] = {"mor",  "show", "check", "ox",  "dagger",  "conj", "star",
                                       "id",   "swap", "cup",   "cap", "discard", "I"};
  for (const char *k : kWords) {
    if (w == k) {
      return true;
    }
  }
  return false;
}

TermPtr make(SourcePos pos, decltype(Term::node) node) { return std::make_shared<const Term>(Term{std::move(node), pos}); }

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  TermPtr expression_only() {
    TermPtr t = expr();
    if (cur().kind != Tok::End) {
      fail("expected end of input");
    }
    return t;
  }

  Script script() {
    Script s;
    while (cur().kind != Tok::End) {
      s.statements.push_back(statement());
    }
    return s;
  }

 private:
  const Token &cur() const { return toks_[k_]; }
  const Token &at(std::size_t d) const { return toks_[std::min(k_ + d, toks_.size() - 1)]; }
  Token take() {
    Token t = cur();
    if (t.kind != Tok::End) {
      ++k_;
    }
    return t;
  }
  bool is_punct(const char *p, std::size_t d = 0) const { return at(d).kind == Tok::Punct && at(d).text == p; }
  bool is_word(const char *w, std::size_t d = 0) const { return at(d).kind == Tok::Ident && at(d).text == w; }

  [[noreturn]] void fail(const std::string &what) const {
    std::string found = cur().kind == Tok::End ? "end of input" : "'" + cur().text + "'";
    throw SyntaxError(cur().pos.line, cur().pos.column, what + ", found " + found);
  }

  void expect_punct(const char *p) {
    if (!is_punct(p)) {
      fail(std::string("expected '") + p + "'");
    }
    take();
  }

  Statement statement() {
    const SourcePos pos = cur().pos;
    if (is_word("mor")) {
      take();
      if (cur().kind != Tok::Ident || is_keyword(cur().text)) {
        fail("expected a morphism name");
      }
      std::string name = take().text;
      expect_punct(":");
      Object dom = object();
      expect_punct("->");
      Object cod = object();
      expect_punct("=");
      TermPtr body = expr();
      expect_punct(";");
      return Binding{std::move(name), std::move(dom), std::move(cod), std::move(body), pos};
    }
    if (is_word("show")) {
      take();
      TermPtr body = expr();
      expect_punct(";");
      return Show{std::move(body), pos};
    }
    if (is_word("check")) {
      take();
      TermPtr lhs = expr();
      expect_punct("==");
      TermPtr rhs = expr();
      expect_punct(";");
      return Check{std::move(lhs), std::move(rhs), pos};
    }
    fail("expected 'mor', 'show' or 'check'");
  }

  std::size_t positive_int() {
    if (cur().kind != Tok::Number || cur().text.find_first_not_of("0123456789") != std::string::npos) {
      fail("expected a positive integer");
    }
    const Token t = cur();
    if (t.value < 1 || t.value > 1e6) {
      fail("dimension out of range");
    }
    take();
    return static_cast<std::size_t>(t.value);
  }

  Object object() {
    if (is_word("I")) {
      take();
      return Object::unit();
    }
    std::vector<std::size_t> f{positive_int()};
    while (is_punct("*")) {
      take();
      f.push_back(positive_int());
    }
    return Object(std::move(f));
  }

  // ";" continues a composite unless a new statement or the end follows.
  bool compose_follows() const {
    if (!is_punct(";")) {
      return false;
    }
    const Token &n = at(1);
    return !(n.kind == Tok::End || is_word("mor", 1) || is_word("show", 1) || is_word("check", 1));
  }

  TermPtr expr() {
    TermPtr lhs = tensor_expr();
    while (compose_follows()) {
      take();
      TermPtr rhs = tensor_expr();
      lhs = make(lhs->pos, BinaryTerm{BinaryOp::Compose, lhs, rhs});
    }
    return lhs;
  }

  TermPtr tensor_expr() {
    TermPtr lhs = unary();
    while (is_word("ox")) {
      take();
      TermPtr rhs = unary();
      lhs = make(lhs->pos, BinaryTerm{BinaryOp::Tensor, lhs, rhs});
    }
    return lhs;
  }

  TermPtr unary() {
    const SourcePos pos = cur().pos;
    for (auto [word, op] : {std::pair{"dagger", UnaryOp::Dagger}, std::pair{"conj", UnaryOp::Conj},
                            std::pair{"star", UnaryOp::Star}}) {
      if (is_word(word)) {
        take();
        return make(pos, UnaryTerm{op, unary()});
      }
    }
    return atom();
  }

  TermPtr atom() {
    const SourcePos pos = cur().pos;
    if (is_punct("(")) {
      take();
      TermPtr t = expr();
      expect_punct(")");
      return t;
    }
    if (is_punct("[")) {
      return literal();
    }
    if (cur().kind == Tok::Ident) {
      const std::string w = cur().text;
      if (w == "id" || w == "cup" || w == "cap" || w == "discard") {
        take();
        const Builtin op = w == "id" ? Builtin::Id : w == "cup" ? Builtin::Cup : w == "cap" ? Builtin::Cap
                                                                                         : Builtin::Discard;
        return make(pos, BuiltinTerm{op, {positive_int()}});
      }
      if (w == "swap") {
        take();
        const std::size_t a = positive_int();
        const std::size_t b = positive_int();
        return make(pos, BuiltinTerm{Builtin::Swap, {a, b}});
      }
      if (!is_keyword(w)) {
        take();
        return make(pos, NameRef{w});
      }
    }
    fail("expected an expression");
  }

  TermPtr literal() {
    const SourcePos pos = take().pos;
    Literal lit;
    lit.rows.emplace_back();
    for (;;) {
      lit.rows.back().push_back(entry());
      if (is_punct(",")) {
        take();
      } else if (is_punct(";")) {
        if (lit.rows.size() > 1 && lit.rows.back().size() != lit.rows.front().size()) {
          fail("ragged matrix literal");
        }
        take();
        lit.rows.emplace_back();
      } else if (is_punct("]")) {
        if (lit.rows.size() > 1 && lit.rows.back().size() != lit.rows.front().size()) {
          fail("ragged matrix literal");
        }
        take();
        return make(pos, std::move(lit));
      } else {
        fail("expected ',', ';' or ']' in matrix literal");
      }
    }
  }

  // One signed real or imaginary part; the bare word "i" is the unit.
  std::pair<double, bool> part(bool allow_sign) {
    double sign = 1.0;
    if (allow_sign && (is_punct("+") || is_punct("-"))) {
      sign = take().text == "-" ? -1.0 : 1.0;
    }
    if (cur().kind == Tok::Number) {
      return {sign * take().value, false};
    }
    if (cur().kind == Tok::Imag) {
      return {sign * take().value, true};
    }
    if (is_word("i")) {
      take();
      return {sign, true};
    }
    fail("expected a number");
  }

  Complex entry() {
    auto [a, a_imag] = part(true);
    if (a_imag) {
      return {0.0, a};
    }
    if (is_punct("+") || is_punct("-")) {
      auto [b, b_imag] = part(true);
      if (!b_imag) {
        fail("expected an imaginary part");
      }
      return {a, b};
    }
    return {a, 0.0};
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

// Binding strength: compose 0, tensor 1, unary 2, atom 3.
int precedence(const Term &t) {
  if (const auto *b = std::get_if<BinaryTerm>(&t.node)) {
    return b->op == BinaryOp::Compose ? 0 : 1;
  }
  return std::holds_alternative<UnaryTerm>(t.node) ? 2 : 3;
}

std::string print_entry(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0) {
    return format_number(re);
  }
  if (re == 0.0) {
    return format_number(im) + "i";
  }
  return format_number(re) + (std::signbit(im) ? "-" : "+") + format_number(std::abs(im)) + "i";
}

void print_into(std::string &out, const Term &t, int min_prec) {
  const bool paren = precedence(t) < min_prec;
  if (paren) {
    out += '(';
  }
  std::visit(
      [&](const auto &n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Literal>) {
          out += '[';
          for (std::size_t r = 0; r < n.rows.size(); ++r) {
            if (r) {
              out += "; ";
            }
            for (std::size_t c = 0; c < n.rows[r].size(); ++c) {
              if (c) {
                out += ", ";
              }
              out += print_entry(n.rows[r][c]);
            }
          }
          out += ']';
        } else if constexpr (std::is_same_v<N, BuiltinTerm>) {
          static const char *const kNames[] = {"id", "swap", "cup", "cap", "discard"};
          out += kNames[static_cast<int>(n.op)];
          for (std::size_t d : n.dims) {
            out += ' ' + std::to_string(d);
          }
        } else if constexpr (std::is_same_v<N, NameRef>) {
          out += n.name;
        } else if constexpr (std::is_same_v<N, UnaryTerm>) {
          static const char *const kNames[] = {"dagger", "conj", "star"};
          out += kNames[static_cast<int>(n.op)];
          out += ' ';
          print_into(out, *n.arg, 2);
        } else {
          const int p = n.op == BinaryOp::Compose ? 0 : 1;
          print_into(out, *n.lhs, p);
          out += n.op == BinaryOp::Compose ? " ; " : " ox ";
          print_into(out, *n.rhs, p + 1);
        }
      },
      t.node);
  if (paren) {
    out += ')';
  }
}

std::string where(const Term &t) {
  return "'" + print(t) + "' at line " + std::to_string(t.pos.line) + ", col " + std::to_string(t.pos.column);
}

template <Scalar S>
S literal_scalar(Complex z, const Term &t) {
  if constexpr (std::is_same_v<S, Complex>) {
    return z;
  } else {
    if (z == Complex(0.0)) {
      return Bool(false);
    }
    if (z == Complex(1.0)) {
      return Bool(true);
    }
    throw TypeError("boolean literal entries must be 0 or 1 in " + where(t));
  }
}

template <Scalar S>
Mor<S> eval_node(const Term &t, const Env<S> &env) {
  return std::visit(
      [&](const auto &n) -> Mor<S> {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Literal>) {
          std::vector<S> e;
          for (const auto &row : n.rows) {
            for (Complex z : row) {
              e.push_back(literal_scalar<S>(z, t));
            }
          }
          return Mor<S>(Object{n.rows.front().size()}, Object{n.rows.size()}, std::move(e));
        } else if constexpr (std::is_same_v<N, BuiltinTerm>) {
          const Object a{n.dims[0]};
          switch (n.op) {
            case Builtin::Id:
              return identity<S>(a);
            case Builtin::Swap:
              return swap<S>(a, Object{n.dims[1]});
            case Builtin::Cup:
              return cup<S>(a);
            case Builtin::Cap:
            case Builtin::Discard:
              return cap<S>(a);
          }
          throw InvalidArgument("unknown builtin");
        } else if constexpr (std::is_same_v<N, NameRef>) {
          auto it = env.find(n.name);
          if (it == env.end()) {
            throw UnknownIdentifier("unknown identifier '" + n.name + "' at line " + std::to_string(t.pos.line) +
                                    ", col " + std::to_string(t.pos.column));
          }
          return it->second;
        } else if constexpr (std::is_same_v<N, UnaryTerm>) {
          const Mor<S> f = eval<S>(*n.arg, env);
          switch (n.op) {
            case UnaryOp::Dagger:
              return dagger(f);
            case UnaryOp::Conj:
              return conj(f);
            case UnaryOp::Star:
              return conj_star(f);
          }
          throw InvalidArgument("unknown unary operator");
        } else {
          const Mor<S> a = eval<S>(*n.lhs, env);
          const Mor<S> b = eval<S>(*n.rhs, env);
          if (n.op == BinaryOp::Tensor) {
            return tensor(a, b);
          }
          if (!composable(a.cod(), b.dom())) {
            throw TypeError("cannot compose " + a.dom().str() + " -> " + a.cod().str() + " with " + b.dom().str() +
                            " -> " + b.cod().str() + " in " + where(t));
          }
          return compose(b, a);
        }
      },
      t.node);
}

}  // namespace

bool operator==(const Term &a, const Term &b) {
  if (a.node.index() != b.node.index()) {
    return false;
  }
  return std::visit(
      [&](const auto &x) {
        using N = std::decay_t<decltype(x)>;
        const N &y = std::get<N>(b.node);
        if constexpr (std::is_same_v<N, Literal>) {
          return x.rows == y.rows;
        } else if constexpr (std::is_same_v<N, BuiltinTerm>) {
          return x.op == y.op && x.dims == y.dims;
        } else if constexpr (std::is_same_v<N, NameRef>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<N, UnaryTerm>) {
          return x.op == y.op && *x.arg == *y.arg;
        } else {
          return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
        }
      },
      a.node);
}

bool operator==(const Script &a, const Script &b) {
  if (a.statements.size() != b.statements.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    const Statement &x = a.statements[i];
    const Statement &y = b.statements[i];
    if (x.index() != y.index()) {
      return false;
    }
    if (const auto *p = std::get_if<Binding>(&x)) {
      const auto &q = std::get<Binding>(y);
      if (p->name != q.name || !(p->dom == q.dom) || !(p->cod == q.cod) || !(*p->body == *q.body)) {
        return false;
      }
    } else if (const auto *p = std::get_if<Show>(&x)) {
      if (!(*p->body == *std::get<Show>(y).body)) {
        return false;
      }
    } else {
      const auto &cx = std::get<Check>(x);
      const auto &cy = std::get<Check>(y);
      if (!(*cx.lhs == *cy.lhs) || !(*cx.rhs == *cy.rhs)) {
        return false;
      }
    }
  }
  return true;
}

TermPtr parse_expr(std::string_view text) { return Parser(text).expression_only(); }

Script parse_script(std::string_view text) { return Parser(text).script(); }

std::string print(const Term &t) {
  std::string out;
  print_into(out, t, 0);
  return out;
}

std::string print(const Script &s) {
  std::string out;
  for (const Statement &st : s.statements) {
    if (const auto *b = std::get_if<Binding>(&st)) {
      out += "mor " + b->name + " : " + b->dom.str() + " -> " + b->cod.str() + " = " + print(*b->body) + ";\n";
    } else if (const auto *sh = std::get_if<Show>(&st)) {
      out += "show " + print(*sh->body) + ";\n";
    } else {
      const auto &c = std::get<Check>(st);
      out += "check " + print(*c.lhs) + " == " + print(*c.rhs) + ";\n";
    }
  }
  return out;
}

template <Scalar S>
Mor<S> eval(const Term &t, const Env<S> &env) {
  try {
    return eval_node<S>(t, env);
  } catch (const DimensionMismatch &e) {
    throw TypeError(std::string(e.what()) + " in " + where(t));
  } catch (const MissingFactorSplit &e) {
    throw TypeError(std::string(e.what()) + " in " + where(t));
  }
}

template <Scalar S>
Mor<S> eval_binding(const Binding &b, const Env<S> &env) {
  const Mor<S> m = eval<S>(*b.body, env);
  if (m.dom().total() != b.dom.total() || m.cod().total() != b.cod.total()) {
    throw TypeError("'" + b.name + "' declared " + b.dom.str() + " -> " + b.cod.str() + " but body has type " +
                    m.dom().str() + " -> " + m.cod().str() + " at line " + std::to_string(b.pos.line) + ", col " +
                    std::to_string(b.pos.column));
  }
  return m.retyped(b.dom, b.cod);
}

template CMor eval<Complex>(const Term &, const Env<Complex> &);
template RMor eval<Bool>(const Term &, const Env<Bool> &);
template CMor eval_binding<Complex>(const Binding &, const Env<Complex> &);
template RMor eval_binding<Bool>(const Binding &, const Env<Bool> &);

}  // namespace cpkit::dsl
