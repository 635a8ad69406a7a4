#pragma once

#include <optional>

#include "vforge/poly.hpp"

namespace vforge {

// A monic factor of f over Q with 0 < degree < deg f, or nullopt when f is
// irreducible over Q. Uses modular factorization, Hensel lifting past the
// Mignotte bound and exhaustive recombination; meant for small degrees.
std::optional<Poly> find_rational_factor(const Poly& f);

inline bool is_irreducible_over_q(const Poly& f) {
  return f.degree() >= 1 && !find_rational_factor(f).has_value();
}

}  // namespace vforge
