#include "vforge/pairs.hpp"

#include <algorithm>

namespace vforge {

namespace {

PairEval minimize(const std::vector<Value>& coeff_values, const Value& delta) {
  PairEval out{Value::infinity(), {}};
  for (std::size_t j = 0; j < coeff_values.size(); ++j) {
    Value t = coeff_values[j];
    if (j > 0 && t.is_finite()) t = t + delta.scaled(Rational(static_cast<long>(j)));
    if (out.S.empty() || t < out.value) {
      out.value = t;
      out.S = {static_cast<int>(j)};
    } else if (t == out.value) {
      out.S.push_back(static_cast<int>(j));
    }
  }
  return out;
}

bool same_extension(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  const auto& x = *a.extension();
  const auto& y = *b.extension();
  return &x == &y || (x.prime() == y.prime() && x.index() == y.index() && x.min_poly() == y.min_poly());
}

}  // namespace

PairEval pair_eval(const PairOfDefinition& pair, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("pair_eval of the zero polynomial");
  std::vector<Value> vals;
  for (int j = 0; j <= f.degree(); ++j)
    vals.push_back(pair.center.valuation_at(j == 0 ? f : hasse_derivative(f, j)));
  return minimize(vals, pair.delta);
}

PairEval pair_eval(const PairOfDefinition& pair, const NFPoly& f) {
  const Poly& m = pair.center.field_modulus();
  std::size_t n = f.size();
  while (n > 0 && (f[n - 1] % m).is_zero()) --n;
  if (n == 0) throw std::invalid_argument("pair_eval of the zero polynomial");
  std::vector<Poly> powers{Poly(1)};
  for (std::size_t i = 1; i < n; ++i) powers.push_back((powers.back() * pair.center.representative()) % m);
  std::vector<Value> vals;
  for (std::size_t j = 0; j < n; ++j) {
    Poly c;
    for (std::size_t k = j; k < n; ++k)
      c += f[k] * powers[k - j] * Rational(binomial(k, j));
    vals.push_back(pair.center.element_valuation(c % m));
  }
  return minimize(vals, pair.delta);
}

Value center_distance(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (b.representative().is_constant()) return a.valuation_at(Poly::linear(b.representative().coeff(0)));
  if (a.representative().is_constant()) return b.valuation_at(Poly::linear(a.representative().coeff(0)));
  if (same_extension(a, b)) return a.element_valuation(b.representative() - a.representative());
  throw IncomparableError("centers in unrelated fields: " + a.field_modulus().str('Y') + " (extension " +
                          std::to_string(a.extension()->index()) + ") and " + b.field_modulus().str('Y') +
                          " (extension " + std::to_string(b.extension()->index()) + ")");
}

bool distance_at_least(const AlgebraicNumber& a, const AlgebraicNumber& b, const Value& delta) {
  try {
    return center_distance(a, b) >= delta;
  } catch (const IncomparableError&) {
    // Same root polynomial, different p-adic factors: b is a conjugate of a
    // other than a itself. Decided when every such distance is on one side.
    if (a.field_modulus() != b.field_modulus() || a.representative() != b.representative() ||
        a.prime() != b.prime())
      throw;
    auto d = root_distances(a, a.minimal_polynomial());
    d.pop_back();  // a itself
    bool all_above = std::all_of(d.begin(), d.end(), [&](const Value& v) { return v >= delta; });
    bool all_below = std::all_of(d.begin(), d.end(), [&](const Value& v) { return v < delta; });
    if (all_above) return true;
    if (all_below) return false;
    throw;
  }
}

bool pairs_equivalent(const PairOfDefinition& p1, const PairOfDefinition& p2) {
  if (p1.center.prime() != p2.center.prime()) throw IncomparableError("pairs over different primes");
  if (p1.delta != p2.delta) return false;
  return distance_at_least(p1.center, p2.center, p1.delta);
}

Value best_rational_distance(const AlgebraicNumber& a, const Value& cap, Rational* witness) {
  Poly mp = a.minimal_polynomial();
  if (mp.degree() == 1) {
    if (witness) *witness = -mp.coeff(0);
    return Value::infinity();
  }
  long p = a.prime();
  Rational c = 0;
  Value v = a.valuation_at(Poly::linear(c));
  for (;;) {
    if (witness) *witness = c;
    if (v >= cap || !is_integer(v.standard())) return v;
    long k = v.standard().get_num().get_si();
    Rational pk = 1;
    for (long i = 0; i < std::labs(k); ++i) pk *= p;
    if (k < 0) pk = 1 / pk;
    bool moved = false;
    for (long d = 1; d < p && !moved; ++d) {
      Rational c2 = c + d * pk;
      Value v2 = a.valuation_at(Poly::linear(c2));
      if (v2 > v) {
        c = c2;
        v = v2;
        moved = true;
      }
    }
    if (!moved) return v;
  }
}

MinimalityVerdict is_minimal_pair(const PairOfDefinition& pair, const Chain* chain,
                                  const std::vector<Poly>& candidates) {
  MinimalityVerdict out;
  const AlgebraicNumber& a = pair.center;
  out.degree = a.degree();
  out.minimal = true;
  if (chain) out.chain_degree = chain->d();
  if (out.degree == 1) {
    out.certificate.push_back("center is rational");
  } else {
    Rational c;
    Value r = best_rational_distance(a, pair.delta, &c);
    if (r >= pair.delta) {
      out.minimal = false;
      out.certificate.push_back("rational center " + c.get_str() + " at distance " + r.str() +
                                " >= " + pair.delta.str());
    } else {
      out.certificate.push_back("rational centers: sup distance " + r.str() + " < " + pair.delta.str());
    }
    std::vector<Poly> polys = candidates;
    if (chain)
      for (std::size_t i = 0; i < chain->size(); ++i) polys.push_back(chain->key(i));
    for (const auto& g : polys) {
      if (g.degree() <= 1 || g.degree() >= out.degree) continue;
      Value d = root_distances(a, g).back();
      if (d >= pair.delta) {
        out.minimal = false;
        out.certificate.push_back("root of " + g.str() + " at distance " + d.str() + " >= " + pair.delta.str());
      } else {
        out.certificate.push_back("roots of " + g.str() + ": max distance " + d.str());
      }
    }
  }
  if (chain) {
    bool match = out.degree == chain->d();
    out.certificate.push_back("degree " + std::to_string(out.degree) + (match ? " = " : " != ") + "d(w) = " +
                              std::to_string(chain->d()));
    out.minimal = out.minimal && match;
  }
  return out;
}

}  // namespace vforge
