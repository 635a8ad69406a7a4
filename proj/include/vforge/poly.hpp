#pragma once

#include <string>
#include <vector>

#include "vforge/rational.hpp"

namespace vforge {

// Dense univariate polynomial over Q; coefficients stored low degree first,
// never with a zero leading coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);
  Poly(long c) : Poly(Rational(c)) {}

  static Poly x();
  static Poly monomial(const Rational& c, int deg);
  // X - c
  static Poly linear(const Rational& c);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_integral() const;

  // Coefficient of X^i, zero past the degree.
  Rational coeff(int i) const;
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Rational operator()(const Rational& x) const;
  // f(g(X))
  Poly compose(const Poly& g) const;
  // f(X + c)
  Poly shift(const Rational& c) const;
  Poly derivative() const;
  Poly monic() const;

  std::string str(char var = 'X') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);
Poly pow(const Poly& f, unsigned n);

// Hasse derivative: coefficient of T^b in f(X + T).
Poly hasse_derivative(const Poly& f, int b);

// Coefficients (f_0, ..., f_r) with f = sum f_j q^j and deg f_j < deg q.
// q must be monic of positive degree.
std::vector<Poly> q_expansion(const Poly& f, const Poly& q);

}  // namespace vforge
