#pragma once

#include "qkdv/diffpoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qkdv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses an expression over rational literals, jet symbols, hbar and s.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' INTEGER)?
///   primary := INTEGER | symbol | 'hbar' | 's' | '(' expr ')'
///
/// Symbols are "v{k}" for rank one and "v{alpha},{k}" otherwise; hbar
/// parses to s^2. Division is only allowed by nonzero rational constants.
DiffPoly parse(std::string_view text, int rank = 1);

}  // namespace qkdv
