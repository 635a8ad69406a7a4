#pragma once

#include <compare>
#include <string>

#include "vforge/rational.hpp"

namespace vforge {

// Element r + s*tau of the ordered group Q (+) Q*tau (lexicographic, tau
// infinitesimal and positive), or the symbol Infinity above everything.
class Value {
 public:
  Value() = default;
  Value(Rational r, Rational s = 0);
  Value(long r) : Value(Rational(r)) {}

  static Value infinity();

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  // True for finite values with zero tau part.
  bool is_rational() const { return !inf_ && s_ == 0; }

  const Rational& standard() const;
  const Rational& tau() const;

  // c * v. Scaling Infinity by a non-positive number is rejected.
  Value scaled(const Rational& c) const;

  friend Value operator+(const Value& a, const Value& b);
  // a - b, requires b finite.
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator-(const Value& a);

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

  // "3/2", "3/2 + 1/2t", "-1t", "inf"
  std::string str() const;
  // Chain-file form, "3/2 + 1 t".
  std::string file_str() const;

 private:
  bool inf_ = false;
  Rational r_ = 0;
  Rational s_ = 0;
};

Value min(const Value& a, const Value& b);
Value max(const Value& a, const Value& b);

}  // namespace vforge
