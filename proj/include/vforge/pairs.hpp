#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vforge/chain.hpp"
#include "vforge/extensions.hpp"

namespace vforge {

// Raised when v(a - b) is not determined by the data at hand (centers in
// unrelated fields).
class IncomparableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PairOfDefinition {
  AlgebraicNumber center;
  Value delta;
};

struct PairEval {
  Value value;
  std::vector<int> S;  // indices j achieving the minimum, from 0
};

// min_j v((d_j f)(a)) + j delta over the Taylor expansion of f at a.
PairEval pair_eval(const PairOfDefinition& pair, const Poly& f);
// f with coefficients in Q(a) = Q[Y]/(m).
PairEval pair_eval(const PairOfDefinition& pair, const NFPoly& f);

// v(a - b); defined when both centers share one extension object, when one
// center is rational, or when the conjugate-distance multiset of a decides
// every comparison with delta (see distance_at_least).
Value center_distance(const AlgebraicNumber& a, const AlgebraicNumber& b);
// v(a - b) >= delta, also decided for conjugates in different fields when all
// conjugate distances of a fall on the same side of delta.
bool distance_at_least(const AlgebraicNumber& a, const AlgebraicNumber& b, const Value& delta);

bool pairs_equivalent(const PairOfDefinition& p1, const PairOfDefinition& p2);

struct MinimalityVerdict {
  bool minimal = false;
  int degree = 0;                  // [Q(a) : Q]
  std::optional<int> chain_degree;  // d(w) when a chain is supplied
  std::vector<std::string> certificate;
};

// Degree-one candidates are decided exactly; candidate polynomials of smaller
// degree (chain keys when a chain is given, plus `candidates`) are decided via
// the Taylor polygon of the candidate at a.
MinimalityVerdict is_minimal_pair(const PairOfDefinition& pair, const Chain* chain = nullptr,
                                  const std::vector<Poly>& candidates = {});

// sup over rational c of v(a - c), capped: returns the first value >= cap
// reached by the digit search, or the supremum when it is below cap.
Value best_rational_distance(const AlgebraicNumber& a, const Value& cap, Rational* witness = nullptr);

struct CheckOptions {
  int samples = 100;  // R
  std::uint64_t seed = 0x7a3d9c41ULL;
};

struct CommonExtensionVerdict {
  bool ok = true;
  std::size_t checked = 0;
  std::string family;   // family of the failing polynomial
  std::optional<Poly> witness;
  std::string detail;
};

// Checks eval(chain, g) = v(g(a)) on the certificate family of degrees below
// d(w), and pair_eval = eval on R random polynomials of degree up to 2 d(w).
// Throws std::invalid_argument if a is not a root of Q_last or delta is not
// epsilon of the last key.
CommonExtensionVerdict common_extension_check(const Chain& chain, const PairOfDefinition& pair,
                                              const CheckOptions& options = {});

struct ExtensionClass {
  PairOfDefinition representative;
  std::size_t extension_index = 0;
  int local_degree = 0;      // deg of the p-adic factor of Q_last
  int ball_size = 0;         // roots of Q_last within delta of the center
  int classes = 0;           // local_degree / ball_size
  std::vector<Poly> in_field_roots;  // conjugates in Q(a) checked explicitly
  CommonExtensionVerdict check;
  MinimalityVerdict minimality;
};

struct CommonExtensionReport {
  int class_count = 0;
  int root_count = 0;  // distinct roots of Q_last
  std::vector<ExtensionClass> extensions;
  bool all_pass = true;
};

CommonExtensionReport enumerate_common_extensions(const Chain& chain, const CheckOptions& options = {});

struct LemmaCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Root lemmas between consecutive levels j and j + 1.
std::vector<LemmaCheck> verify_root_lemmas(const Chain& chain, std::size_t j,
                                           const CheckOptions& options = {});

}  // namespace vforge
