#include "vforge/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace vforge {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, int deg) {
  Poly r;
  if (c == 0) return r;
  r.c_.assign(deg + 1, Rational(0));
  r.c_[deg] = c;
  return r;
}

Poly Poly::linear(const Rational& c) { return Poly(std::vector<Rational>{-c, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_integral() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::compose(const Poly& g) const {
  Poly acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
  return acc;
}

Poly Poly::shift(const Rational& c) const { return compose(Poly(std::vector<Rational>{c, 1})); }

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Poly r = *this;
  r *= Rational(1) / c_.back();
  return r;
}

std::string Poly::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

DivMod divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = f.coefficients();
  const int dg = g.degree();
  const int df = f.degree();
  if (df < dg) return {Poly(), f};
  std::vector<Rational> q(df - dg + 1);
  const Rational inv = Rational(1) / g.leading();
  const auto& gc = g.coefficients();
  for (int k = df - dg; k >= 0; --k) {
    Rational t = r[k + dg] * inv;
    if (t == 0) continue;
    q[k] = t;
    for (int i = 0; i <= dg; ++i) r[k + i] -= t * gc[i];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).quotient; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).remainder; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly pow(const Poly& f, unsigned n) {
  Poly r(1);
  Poly b = f;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Poly hasse_derivative(const Poly& f, int b) {
  if (b < 0) throw std::domain_error("negative Hasse derivative order");
  if (b > f.degree()) return Poly();
  std::vector<Rational> r(f.degree() - b + 1);
  for (int k = b; k <= f.degree(); ++k) r[k - b] = f.coeff(k) * Rational(binomial(k, b));
  return Poly(std::move(r));
}

std::vector<Poly> q_expansion(const Poly& f, const Poly& q) {
  if (!q.is_monic() || q.degree() < 1)
    throw std::domain_error("expansion requires a monic polynomial of positive degree");
  std::vector<Poly> out;
  Poly rest = f;
  while (!rest.is_zero()) {
    DivMod d = divmod(rest, q);
    out.push_back(std::move(d.remainder));
    rest = std::move(d.quotient);
  }
  return out;
}

}  // namespace vforge
