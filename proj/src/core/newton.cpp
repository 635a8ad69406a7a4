#include "vforge/newton.hpp"

#include <algorithm>
#include <stdexcept>

namespace vforge {

std::vector<Rational> NewtonPolygon::root_valuations() const {
  std::vector<Rational> out;
  for (const auto& s : sides) {
    Rational v = -s.slope();
    for (long k = 0; k < s.length(); ++k) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NewtonPolygon lower_hull(std::vector<std::pair<long, Rational>> pts) {
  NewtonPolygon np;
  if (pts.empty()) return np;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i].first == pts[i - 1].first) throw std::invalid_argument("repeated abscissa");
  // Monotone chain; drop the middle point when it lies on or above the chord.
  std::vector<std::pair<long, Rational>> h;
  for (const auto& p : pts) {
    while (h.size() >= 2) {
      const auto& a = h[h.size() - 2];
      const auto& b = h[h.size() - 1];
      // b is not strictly below segment a-p
      Rational lhs = (b.second - a.second) * Rational(p.first - a.first);
      Rational rhs = (p.second - a.second) * Rational(b.first - a.first);
      if (lhs >= rhs)
        h.pop_back();
      else
        break;
    }
    h.push_back(p);
  }
  np.vertices = h;
  np.leftmost = h.front().first;
  for (size_t i = 1; i < h.size(); ++i)
    np.sides.push_back(NewtonSide{h[i - 1].first, h[i].first, h[i - 1].second, h[i].second});
  return np;
}

NewtonPolygon newton_polygon(const Poly& f, long p) {
  if (f.is_zero()) throw std::domain_error("Newton polygon of the zero polynomial");
  std::vector<std::pair<long, Rational>> pts;
  for (int j = 0; j <= f.degree(); ++j)
    if (f.coeff(j) != 0) pts.emplace_back(j, Rational(padic_valuation(f.coeff(j), p)));
  return lower_hull(std::move(pts));
}

std::vector<Value> root_valuation_multiset(const Poly& f, long p) {
  NewtonPolygon np = newton_polygon(f, p);
  std::vector<Value> out;
  for (const auto& r : np.root_valuations()) out.emplace_back(r);
  for (long k = 0; k < np.zero_roots(); ++k) out.push_back(Value::infinity());
  return out;
}

}  // namespace vforge
