#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "vforge/chain.hpp"
#include "vforge/poly.hpp"
#include "vforge/value.hpp"

namespace vforge {

class ReducibleError : public std::runtime_error {
 public:
  ReducibleError(Poly poly, Poly factor);
  const Poly& poly() const { return poly_; }
  const Poly& factor() const { return factor_; }

 private:
  Poly poly_;
  Poly factor_;
};

struct ExtendOptions {
  int max_degree = 8;
  int max_field_degree = FiniteField::kDefaultMaxDegree;
};

// One extension of v_p to Q[Y]/(m). Approximated by a MacLane chain in Y
// (base levels plus a last key phi of degree deg F, where F is the p-adic
// factor of m this extension belongs to) together with lambda = v(phi(theta)).
// lambda is Infinity once phi = m. The approximation is refined on demand;
// refinement is synchronized so concurrent valuation() calls are safe.
class ValuationExtension {
 public:
  struct Approximation {
    Chain base;
    Poly key;
    Value value;
  };

  ValuationExtension(Poly m, long p, std::size_t index, int e, int f, Approximation approx);

  const Poly& min_poly() const { return m_; }
  long prime() const { return p_; }
  std::size_t index() const { return index_; }
  int ramification() const { return e_; }
  int residue_degree() const { return f_; }
  // deg F = e * f
  int local_degree() const { return e_ * f_; }

  // v(g(theta)) for the root theta of m attached to this extension.
  Value valuation(const Poly& g) const;

  Approximation approximation() const;
  // Refine until the last key's value is at least `target` (or exact).
  Approximation approximation_at_least(const Value& target) const;
  // Chain text of the current approximation, last level included when finite.
  std::string describe() const;

 private:
  std::shared_ptr<const Approximation> snapshot() const;
  void refine(const std::shared_ptr<const Approximation>& seen) const;

  Poly m_;
  long p_;
  std::size_t index_;
  int e_;
  int f_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const Approximation> state_;
};

using ExtensionPtr = std::shared_ptr<const ValuationExtension>;

// All extensions of v_p to Q[Y]/(m). m monic, irreducible over Q, with
// p-integral coefficients and degree at most options.max_degree.
std::vector<ExtensionPtr> extend_to_number_field(const Poly& m, long p, const ExtendOptions& options = {});

// Element of Q(a) = Q[Y]/(m) given by a representative polynomial in Y, with
// the valuation of the chosen extension.
class AlgebraicNumber {
 public:
  // The class of Y itself.
  explicit AlgebraicNumber(ExtensionPtr ext);
  AlgebraicNumber(ExtensionPtr ext, const Poly& representative);

  const ExtensionPtr& extension() const { return ext_; }
  const Poly& representative() const { return rep_; }
  const Poly& field_modulus() const { return ext_->min_poly(); }
  long prime() const { return ext_->prime(); }

  // g(a) as an element of Q[Y]/(m).
  Poly evaluate(const Poly& g) const;
  // v(g(a)).
  Value valuation_at(const Poly& g) const;
  // v of an element of Q[Y]/(m).
  Value element_valuation(const Poly& element) const;
  // Minimal polynomial of a over Q.
  Poly minimal_polynomial() const;
  int degree() const { return minimal_polynomial().degree(); }
  bool is_root_of(const Poly& f) const { return evaluate(f).is_zero(); }

 private:
  ExtensionPtr ext_;
  Poly rep_;
};

// Polynomial in X with coefficients in Q(a), each given as a polynomial in Y
// reduced modulo the field modulus. Index = degree in X.
using NFPoly = std::vector<Poly>;

Value algebraic_valuation(const AlgebraicNumber& a, const Poly& g);

// {v(b - a)} over the roots b of Res_Y(m1(Y), m2(X + Y)); zero differences are
// dropped when m1 == m2, otherwise reported as Infinity. Ascending.
std::vector<Value> root_difference_valuations(const Poly& m1, const Poly& m2, long p);

// {v(b - a)} over the roots b of f (with multiplicity; Infinity for b = a),
// from the Newton polygon of the Taylor expansion of f at a. Ascending.
std::vector<Value> root_distances(const AlgebraicNumber& a, const Poly& f);

// max over roots b of f of min(delta, v(a - b)).
Value delta_via_roots(const AlgebraicNumber& center, const Value& delta, const Poly& f);

// Roots of f in Q(a) among small-coefficient representatives (coefficients
// in [-2, 2] up to degree 4, in [-1, 1] beyond). Always contains a itself
// when f(a) = 0. Deterministic order.
std::vector<AlgebraicNumber> small_roots_in_field(const AlgebraicNumber& a, const Poly& f);

}  // namespace vforge
