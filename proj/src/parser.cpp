#include "qkdv/parser.hpp"

#include <cctype>
#include <optional>

namespace qkdv {

namespace {

enum class Tok { Number, Symbol, Hbar, S, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Var var;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view src, int rank) : src_(src), rank_(rank) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      return t;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      t.text = digits();
      if (pos_ < src_.size() && src_[pos_] == '.') {
        throw ParseError("decimal literals are not exact; use p/q", t.line, t.column);
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
        word += advance();
      }
      if (word == "hbar") {
        t.kind = Tok::Hbar;
        return t;
      }
      if (word == "s") {
        t.kind = Tok::S;
        return t;
      }
      if (word == "v") {
        t.kind = Tok::Symbol;
        t.var = symbol(t);
        return t;
      }
      throw ParseError("unknown symbol '" + word + "'", t.line, t.column);
    }
    advance();
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
    }
    return t;
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      advance();
    }
  }

  std::string digits() {
    std::string d;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      d += advance();
    }
    return d;
  }

  Var symbol(const Token& t) {
    std::string first = digits();
    if (rank_ == 1) {
      if (first.empty()) {
        return Var{1, 0};
      }
      return Var{1, std::stoi(first)};
    }
    if (first.empty() || pos_ >= src_.size() || src_[pos_] != ',') {
      throw ParseError("rank-" + std::to_string(rank_) + " symbols are written v{alpha},{k}", t.line, t.column);
    }
    advance();
    std::string second = digits();
    if (second.empty()) {
      throw ParseError("missing derivative order in symbol", t.line, t.column);
    }
    const int alpha = std::stoi(first);
    if (alpha < 1 || alpha > rank_) {
      throw ParseError("component index out of range", t.line, t.column);
    }
    return Var{alpha, std::stoi(second)};
  }

  std::string_view src_;
  int rank_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view src, int rank) : lex_(src, rank), rank_(rank) { cur_ = lex_.next(); }

  DiffPoly parse_all() {
    DiffPoly p = expr();
    if (cur_.kind != Tok::End) {
      throw ParseError("unexpected trailing input", cur_.line, cur_.column);
    }
    return p;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  DiffPoly expr() {
    DiffPoly acc = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const bool minus = cur_.kind == Tok::Minus;
      shift();
      DiffPoly rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  DiffPoly term() {
    DiffPoly acc = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const bool divide = cur_.kind == Tok::Slash;
      const Token op = cur_;
      shift();
      DiffPoly rhs = unary();
      if (divide) {
        const auto c = rational_constant(rhs);
        if (!c) {
          throw ParseError("division is only allowed by a rational constant", op.line, op.column);
        }
        if (*c == 0) {
          throw ParseError("division by zero", op.line, op.column);
        }
        acc *= Coefficient(Rational(1) / *c);
      } else {
        acc = acc * rhs;
      }
    }
    return acc;
  }

  DiffPoly unary() {
    if (cur_.kind == Tok::Minus) {
      shift();
      return -unary();
    }
    if (cur_.kind == Tok::Plus) {
      shift();
      return unary();
    }
    return power();
  }

  DiffPoly power() {
    DiffPoly base = primary();
    if (cur_.kind == Tok::Caret) {
      shift();
      if (cur_.kind == Tok::Minus) {
        throw ParseError("negative exponents are not allowed", cur_.line, cur_.column);
      }
      if (cur_.kind != Tok::Number) {
        // Covers fractional exponents such as v0^(1/2).
        throw ParseError("exponent must be a non-negative integer literal", cur_.line, cur_.column);
      }
      const Token num = cur_;
      shift();
      if (num.text.size() > 6) {
        throw ParseError("exponent too large", num.line, num.column);
      }
      base = pow(base, static_cast<unsigned>(std::stoul(num.text)));
      if (cur_.kind == Tok::Caret) {
        throw ParseError("chained exponents are ambiguous; use parentheses", cur_.line, cur_.column);
      }
    }
    return base;
  }

  DiffPoly primary() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::Number: {
        shift();
        return DiffPoly::constant(Rational(Integer(t.text, 10)), rank_);
      }
      case Tok::Symbol:
        shift();
        return DiffPoly::variable(t.var.alpha, t.var.order, rank_);
      case Tok::Hbar:
        shift();
        return DiffPoly::constant(Coefficient::s_power(2), rank_);
      case Tok::S:
        shift();
        return DiffPoly::constant(Coefficient::s_power(1), rank_);
      case Tok::LParen: {
        shift();
        DiffPoly inner = expr();
        if (cur_.kind != Tok::RParen) {
          throw ParseError("expected ')'", cur_.line, cur_.column);
        }
        shift();
        return inner;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.line, t.column);
      default:
        throw ParseError("expected a number, symbol or '('", t.line, t.column);
    }
  }

  static std::optional<Rational> rational_constant(const DiffPoly& p) {
    if (p.is_zero()) {
      return Rational(0);
    }
    if (p.size() != 1 || !p.terms().begin()->first.is_one()) {
      return std::nullopt;
    }
    const Coefficient& c = p.terms().begin()->second;
    if (!c.is_constant()) {
      return std::nullopt;
    }
    return c.at(0);
  }

  Lexer lex_;
  int rank_;
  Token cur_;
};

}  // namespace

DiffPoly parse(std::string_view text, int rank) {
  if (rank < 1) {
    throw std::invalid_argument("rank must be positive");
  }
  return Parser(text, rank).parse_all();
}

}  // namespace qkdv
