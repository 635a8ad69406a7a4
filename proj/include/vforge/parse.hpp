#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "vforge/poly.hpp"
#include "vforge/value.hpp"

namespace vforge {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

// Polynomial expressions in one variable (X, Y, x or y): + - * / ^, parentheses,
// rational literals and implicit multiplication ("3X^2", "2(X+1)"). Division is
// only by nonzero constants and binds left to right, so "3/2X" is (3/2)*X.
// Columns reported in errors are 1-based and shifted by col_offset.
Poly parse_poly(std::string_view text, std::size_t line = 1, std::size_t col_offset = 0);

// "inf", "3/2", "3/2 + 1/2t", "3/2 + 1 t", "-t", or the pair form "(3/2, 1)".
Value parse_value(std::string_view text, std::size_t line = 1, std::size_t col_offset = 0);

Rational parse_rational(std::string_view text);

}  // namespace vforge
