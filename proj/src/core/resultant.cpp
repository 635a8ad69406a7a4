#include "vforge/resultant.hpp"

#include <stdexcept>

namespace vforge {

Rational resultant(const Poly& f0, const Poly& g0) {
  if (f0.is_zero() || g0.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  Poly f = f0, g = g0;
  Rational acc = 1;
  for (;;) {
    const int n = f.degree();
    const int m = g.degree();
    if (m == 0) {
      Rational r;
      mpz_pow_ui(r.get_num_mpz_t(), g.leading().get_num_mpz_t(), n);
      mpz_pow_ui(r.get_den_mpz_t(), g.leading().get_den_mpz_t(), n);
      r.canonicalize();
      return acc * r;
    }
    if (n == 0) {
      Rational r;
      mpz_pow_ui(r.get_num_mpz_t(), f.leading().get_num_mpz_t(), m);
      mpz_pow_ui(r.get_den_mpz_t(), f.leading().get_den_mpz_t(), m);
      r.canonicalize();
      return acc * r;
    }
    if (n < m) {
      // Res(f, g) = (-1)^(nm) Res(g, f)
      if ((static_cast<long>(n) * m) % 2) acc = -acc;
      std::swap(f, g);
      continue;
    }
    // Res(f, g) = (-1)^(nm) lc(g)^(n - deg r) Res(g, r), r = f mod g
    Poly r = f % g;
    if (r.is_zero()) return 0;
    if ((static_cast<long>(n) * m) % 2) acc = -acc;
    Rational l = g.leading();
    for (int k = 0; k < n - r.degree(); ++k) acc *= l;
    f = std::move(g);
    g = std::move(r);
  }
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolation size mismatch");
  // Newton divided differences
  std::vector<Rational> d = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Poly acc;
  for (size_t i = n; i-- > 0;) acc = acc * Poly::linear(xs[i]) + Poly(d[i]);
  return acc;
}

Poly resultant_in_parameter(const Poly& a, const std::function<Poly(const Rational&)>& b_at,
                            int degree_bound) {
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= degree_bound; ++i) {
    Rational x = i;
    xs.push_back(x);
    ys.push_back(resultant(a, b_at(x)));
  }
  return interpolate(xs, ys);
}

Poly difference_resultant(const Poly& m1, const Poly& m2) {
  // m2(x + Y) keeps degree deg m2 in Y for every x.
  return resultant_in_parameter(
      m1, [&](const Rational& x) { return m2.shift(x); }, m1.degree() * m2.degree());
}

Poly value_resultant(const Poly& a, const Poly& g) {
  if (!a.is_monic()) throw std::domain_error("value resultant needs a monic modulus");
  Poly gg = g % a;
  // Res_Y(a, z - c) = (z - c)^deg a
  if (gg.degree() < 1) return pow(Poly::linear(gg.coeff(0)), a.degree());
  return resultant_in_parameter(
      a, [&](const Rational& z) { return Poly(z) - gg; }, a.degree());
}

Poly characteristic_polynomial(const Poly& a, const Poly& g) {
  return value_resultant(a.monic(), g).monic();
}

}  // namespace vforge
