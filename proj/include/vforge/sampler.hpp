#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "vforge/poly.hpp"

namespace vforge {

// Deterministic sampler of p-adically interesting polynomials. Uses
// mt19937_64 with explicit reduction so streams are identical across
// standard libraries.
class PolySampler {
 public:
  PolySampler(long p, std::uint64_t seed);
  // Independent stream for a named sub-task.
  PolySampler(long p, std::uint64_t seed, std::string_view stream);

  long uniform(long lo, long hi);
  // u * p^k with u in [-5, 5], k in [0, 3].
  Rational coefficient();
  // Nonzero coefficient.
  Rational unit_coefficient();
  Poly monic(int degree);
  // Nonzero, degree uniform in [0, max_degree], arbitrary leading coefficient.
  Poly any(int max_degree);
  // Rational centers: integers, p-power multiples and a few fractions.
  Rational center();

 private:
  long p_;
  std::mt19937_64 rng_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::string_view stream);

}  // namespace vforge
