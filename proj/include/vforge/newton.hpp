#pragma once

#include <utility>
#include <vector>

#include "vforge/poly.hpp"
#include "vforge/value.hpp"

namespace vforge {

struct NewtonSide {
  long x0 = 0, x1 = 0;
  Rational y0, y1;

  long length() const { return x1 - x0; }
  Rational slope() const { return (y1 - y0) / Rational(x1 - x0); }
};

// Lower convex hull of finitely many points (x, y) with distinct x.
struct NewtonPolygon {
  std::vector<std::pair<long, Rational>> vertices;
  std::vector<NewtonSide> sides;
  // Abscissa of the leftmost point: for a polynomial, the multiplicity of the
  // root 0 (or of the expansion center).
  long leftmost = 0;

  // -slope of each side repeated by its length, ascending. For a polynomial
  // these are the valuations of its nonzero roots.
  std::vector<Rational> root_valuations() const;
  // Multiplicity of the root at the center, one Infinity per unit.
  long zero_roots() const { return leftmost; }
};

NewtonPolygon lower_hull(std::vector<std::pair<long, Rational>> points);

// Polygon of the points (j, v_p(c_j)) for the nonzero coefficients of f.
NewtonPolygon newton_polygon(const Poly& f, long p);

// Root valuations of f (nonzero roots), ascending, with Infinity repeated for
// the root 0.
std::vector<Value> root_valuation_multiset(const Poly& f, long p);

}  // namespace vforge
