#pragma once

#include <functional>
#include <vector>

#include "vforge/poly.hpp"

namespace vforge {

// Res(f, g) = lc(f)^deg g * prod_{f(a)=0} g(a). Both inputs nonzero.
Rational resultant(const Poly& f, const Poly& g);

// Res_Y(a(Y), b_x(Y)) as a polynomial in x, where b_x is given pointwise by
// b_at(x) and the result has degree at most degree_bound. Computed by
// evaluation at degree_bound + 1 integer points and interpolation. b_at must
// keep its Y-degree fixed for all x.
Poly resultant_in_parameter(const Poly& a, const std::function<Poly(const Rational&)>& b_at,
                            int degree_bound);

// Res_Y(m1(Y), m2(X + Y)): roots are the differences b - a, m1(a) = m2(b) = 0.
Poly difference_resultant(const Poly& m1, const Poly& m2);

// Res_Y(a(Y), Z - g(Y)) as a polynomial in Z, a monic. Up to the sign
// (-1)^(deg a) this is the characteristic polynomial of g(y) on Q[Y]/(a).
Poly value_resultant(const Poly& a, const Poly& g);

// Monic characteristic polynomial of g(y) on Q[Y]/(a), a monic.
Poly characteristic_polynomial(const Poly& a, const Poly& g);

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace vforge
