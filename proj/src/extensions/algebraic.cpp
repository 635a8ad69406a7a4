#include <algorithm>

#include "vforge/extensions.hpp"
#include "vforge/newton.hpp"
#include "vforge/resultant.hpp"

namespace vforge {

namespace {

// g(r) mod m by Horner.
Poly eval_mod(const Poly& g, const Poly& r, const Poly& m) {
  Poly acc;
  const auto& c = g.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = (acc * r + Poly(c[i])) % m;
  return acc;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(ExtensionPtr ext) : AlgebraicNumber(ext, Poly::x()) {}

AlgebraicNumber::AlgebraicNumber(ExtensionPtr ext, const Poly& representative)
    : ext_(std::move(ext)), rep_(representative % ext_->min_poly()) {}

Poly AlgebraicNumber::evaluate(const Poly& g) const { return eval_mod(g, rep_, ext_->min_poly()); }

Value AlgebraicNumber::valuation_at(const Poly& g) const { return ext_->valuation(evaluate(g)); }

Value AlgebraicNumber::element_valuation(const Poly& element) const { return ext_->valuation(element); }

Poly AlgebraicNumber::minimal_polynomial() const {
  Poly chi = characteristic_polynomial(ext_->min_poly(), rep_);
  Poly g = gcd(chi, chi.derivative());
  return (chi / g).monic();
}

Value algebraic_valuation(const AlgebraicNumber& a, const Poly& g) { return a.valuation_at(g); }

std::vector<Value> root_difference_valuations(const Poly& m1, const Poly& m2, long p) {
  Poly r = difference_resultant(m1, m2);
  std::vector<Value> out = root_valuation_multiset(r, p);
  if (m1 == m2) {
    // m1 squarefree: exactly deg m1 zero differences.
    long drop = m1.degree();
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const Value& v) { return v.is_infinite() && drop-- > 0; }),
              out.end());
  }
  return out;
}

std::vector<Value> root_distances(const AlgebraicNumber& a, const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("root distances of a constant");
  std::vector<std::pair<long, Rational>> pts;
  for (int j = 0; j <= f.degree(); ++j) {
    Value v = a.valuation_at(hasse_derivative(f, j));
    if (v.is_finite()) pts.emplace_back(j, v.standard());
  }
  NewtonPolygon np = lower_hull(std::move(pts));
  std::vector<Value> out;
  for (const auto& r : np.root_valuations()) out.emplace_back(r);
  for (long i = 0; i < np.zero_roots(); ++i) out.push_back(Value::infinity());
  return out;
}

Value delta_via_roots(const AlgebraicNumber& center, const Value& delta, const Poly& f) {
  auto d = root_distances(center, f);
  return min(delta, d.back());
}

std::vector<AlgebraicNumber> small_roots_in_field(const AlgebraicNumber& a, const Poly& f) {
  const Poly& m = a.field_modulus();
  int n = m.degree();
  long lo = n <= 4 ? -2 : -1;
  long width = 1 - 2 * lo;
  std::vector<AlgebraicNumber> out;
  if (a.is_root_of(f)) out.push_back(a);
  std::vector<long> digits(n, lo);
  for (;;) {
    std::vector<Rational> c;
    for (long d : digits) c.emplace_back(d);
    Poly r(c);
    if (r != a.representative() && eval_mod(f, r, m).is_zero()) out.emplace_back(a.extension(), r);
    int i = 0;
    while (i < n && ++digits[i] == lo + width) digits[i++] = lo;
    if (i == n) break;
  }
  return out;
}

}  // namespace vforge
