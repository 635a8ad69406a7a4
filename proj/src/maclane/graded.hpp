#pragma once

// Graded-reduction machinery behind Chain: values level by level, normalizing
// monomials, residues of value-zero monomials, residual polynomials and the
// inverse lifting used to manufacture key polynomials.

#include <memory>
#include <vector>

#include "vforge/chain.hpp"

namespace vforge::detail {

struct Level {
  Poly key;
  Value beta;
  int degree = 0;
  long e = 0;        // least e >= 1 with e*beta in Gamma_{i-1}; 0 for a tau value
  Rational gen;      // Gamma_i (rational part) = gen * Z
  Value eps;
  FieldPtr field;    // F_i: coefficients of level-i residual polynomials
  // Link from F_{i-1} (levels i >= 1): F_i = F_{i-1}[y]/(psi_prev).
  FFPoly psi_prev;
  int f_prev = 1;
  FieldExtension link;
  // Exponents (p, Q_0, ..., Q_{i-1}) of N_{i-1}(e * beta); rational levels only.
  std::vector<long> norm_step;
};

struct Reduction {
  Value value;
  long t_min = 0;
  FFPoly poly;
};

class Graded {
 public:
  using Levels = std::vector<std::shared_ptr<const Level>>;
  Graded(long p, const Levels& levels) : p_(p), L_(levels) {}

  // mu_i(g); i = -1 is v_p on constants.
  Value value(int i, const Poly& g) const;
  // Exponents (p, Q_0, ..., Q_i) of the normalizing monomial N_i(gamma).
  std::vector<long> normalizer(int i, const Value& gamma) const;
  // Residue in F_{l+1} of a value-zero monomial in p, Q_0, ..., Q_l.
  FElem unit_residue(int l, std::vector<long> exps) const;
  // Residue in F_i of N_{i-1}(e beta_i)^t N_{i-1}(g) / N_{i-1}(g + t e beta_i).
  FElem term_unit(int i, const Rational& g, long t) const;
  Reduction reduce(int i, const Poly& g) const;
  // Residue in F_i of h / N_{i-1}(mu_{i-1}(h)), deg h < deg Q_i, h != 0.
  FElem coefficient(int i, const Poly& h) const;
  FElem embed(int from, int to, FElem x) const;
  // Poly of degree < deg Q_i with mu_{i-1} value g and coefficient residue c != 0.
  Poly lift(int i, const Rational& g, const FElem& c) const;
  Poly lift_key(const FFPoly& psi) const;

  // New chain with (q, beta) appended; psi = monic residual of q over the
  // current last level (ignored when the chain is empty). No validation.
  Chain build(const Poly& q, const Value& beta, int max_field_degree, const FFPoly& psi) const;

 private:
  const Level& lv(int i) const { return *L_[i]; }
  Rational group_gen(int i) const { return i < 0 ? Rational(1) : lv(i).gen; }
  long p_;
  const Levels& L_;
};

}  // namespace vforge::detail
