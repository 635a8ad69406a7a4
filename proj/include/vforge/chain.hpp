#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vforge/finite_field.hpp"
#include "vforge/poly.hpp"
#include "vforge/value.hpp"

namespace vforge {

// Raised when a chain invariant fails; invariant() is a stable dotted name
// such as "augment.key_test", witness() a human-readable certificate.
class ChainError : public std::runtime_error {
 public:
  ChainError(std::string invariant, std::string witness);
  const std::string& invariant() const { return invariant_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string invariant_;
  std::string witness_;
};

enum class Classification { ResidueTranscendental, ValueTranscendental };
std::string to_string(Classification c);

struct ResidualPolynomial {
  FieldPtr field;
  FFPoly poly;      // in the variable y, nonzero constant term
  Value value;      // eval of the input
  long e = 0;       // ramification index of the last level, 0 for a tau level
  std::string str() const { return ff::str(*field, poly); }
};

struct KeyCertificate {
  bool is_key = false;
  // "", "inhomogeneous", "residual_degree", "residual_reducible",
  // "epsilon_growth". A wrong degree throws ChainError("is_key.degree").
  std::string failure;
  std::string witness;
  std::vector<Value> term_values;  // eval of each term of the expansion in the last key
  std::optional<ResidualPolynomial> residual;
  std::optional<Value> epsilon;       // epsilon(Q) measured after augmenting
  std::optional<Value> epsilon_last;  // epsilon of the current last key
};

struct LevelData {
  int degree = 0;
  Value beta;
  Value epsilon;
  long e = 0;  // 0 when beta has a tau part
  int f = 1;   // degree of the residual of Q_i over the earlier levels (1 for Q_0)
  Rational group_generator;  // rational part of Gamma_i = Gamma_{i-1} + beta_i Z
};

struct ChainData {
  int d = 0;
  Rational group_generator;  // Gamma_w rational part = generator * Z
  bool has_tau = false;      // Gamma_w contains a tau component
  std::vector<LevelData> levels;
  int residue_field_degree = 1;  // [k_w : F_p] up to the transcendental
};

namespace detail {
struct Level;
class Graded;
}  // namespace detail

// Finite MacLane chain [(Q_0, beta_0), ..., (Q_L, beta_L)] describing a
// valuation on Q[X] extending v_p. Immutable; augment() shares the levels.
class Chain {
 public:
  // Empty chain: v_p on constants only. Used as a base for augmentation.
  explicit Chain(long p, int max_field_degree = FiniteField::kDefaultMaxDegree);

  long prime() const { return p_; }
  std::size_t size() const { return levels_.size(); }
  bool empty() const { return levels_.empty(); }
  int max_field_degree() const { return max_field_degree_; }

  const Poly& key(std::size_t i) const;
  const Value& beta(std::size_t i) const;
  const Value& epsilon_at(std::size_t i) const;
  long ramification(std::size_t i) const;
  int degree(std::size_t i) const;
  // d(w): degree of the last key.
  int d() const;

  Chain augment(const Poly& q, const Value& beta) const;
  Chain prefix(std::size_t n) const;

  // w(f); Infinity for f = 0.
  Value eval(const Poly& f) const;
  // mu_i(f), the valuation of the first i + 1 levels.
  Value eval_level(std::size_t i, const Poly& f) const;
  // min_j w(f_j Q_i^j) over the Q_i-expansion of f.
  Value truncate(std::size_t i, const Poly& f) const;
  // max_{b >= 1} (w(f) - w(d_b f)) / b for non-constant f.
  Value epsilon(const Poly& f) const;

  ResidualPolynomial residual_polynomial(const Poly& f) const;
  // beta: the value Q would be attached with; if absent, eval(Q) + 1 is used
  // for the epsilon-growth part of the test.
  KeyCertificate is_key(const Poly& q, const std::optional<Value>& beta = std::nullopt) const;

  // Monic polynomial of degree e * deg(psi) * d() whose residual is psi (monic
  // irreducible over the last residue field, psi != y). Homogeneous of value
  // e * deg(psi) * beta_last in its expansion in the last key.
  Poly lift_key(const FFPoly& psi) const;

  Classification classify() const;
  ChainData data() const;

  // Field of coefficients of the last level's residual polynomials.
  const FieldPtr& residue_field() const;

  friend bool operator==(const Chain& a, const Chain& b);

 private:
  friend class detail::Graded;
  Chain(long p, int maxdeg, std::vector<std::shared_ptr<const detail::Level>> levels);

  long p_;
  int max_field_degree_;
  std::vector<std::shared_ptr<const detail::Level>> levels_;
  FieldPtr prime_field_;
};

}  // namespace vforge
