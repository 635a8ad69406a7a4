#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "corpus.hpp"
#include "oracles/oracles.hpp"
#include "vforge/extensions.hpp"
#include "vforge/factor_q.hpp"
#include "vforge/parse.hpp"
#include "vforge/resultant.hpp"
#include "vforge/sampler.hpp"
#include "vforge/verify.hpp"

using namespace vforge;

namespace {

Poly P(const char* s) { return parse_poly(s); }

std::vector<std::pair<int, int>> types_of(const std::vector<ExtensionPtr>& exts) {
  std::vector<std::pair<int, int>> t;
  for (const auto& e : exts) t.emplace_back(e->ramification(), e->residue_degree());
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<Value> sorted_valuations(const std::vector<ExtensionPtr>& exts, const Poly& g) {
  std::vector<Value> out;
  for (const auto& e : exts) out.push_back(e->valuation(g));
  std::sort(out.begin(), out.end());
  return out;
}

long v2_capped(const Integer& x, long cap) {
  if (x == 0) return cap;
  return std::min(cap, padic_valuation(x, 2));
}

}  // namespace

TEST_CASE("extension counts and types against the p-adic oracle") {
  for (const auto& m : corpus::min_polys()) {
    Poly f = parse_poly(m.poly);
    auto exts = extend_to_number_field(f, m.p);
    CAPTURE(m.poly);
    CAPTURE(m.p);
    CHECK(exts.size() == static_cast<std::size_t>(m.count));
    int sum = 0;
    for (const auto& e : exts) sum += e->local_degree();
    CHECK(sum == f.degree());
    auto ot = oracle::PadicTypes(m.p).types(f);
    REQUIRE(ot.has_value());
    CHECK(*ot == types_of(exts));
  }
}

TEST_CASE("random irreducible polynomials against the p-adic oracle") {
  int compared = 0;
  for (long p : {2L, 3L, 5L}) {
    PolySampler s(p, kDefaultSeed, "extensions.random");
    for (int r = 0; r < 60; ++r) {
      Poly f = s.monic(2 + r % 4);
      if (!is_irreducible_over_q(f)) continue;
      auto exts = extend_to_number_field(f, p);
      int sum = 0;
      for (const auto& e : exts) sum += e->local_degree();
      CHECK(sum == f.degree());
      auto ot = oracle::PadicTypes(p).types(f);
      if (!ot) continue;
      CAPTURE(f.str());
      CHECK(*ot == types_of(exts));
      ++compared;
    }
  }
  CHECK(compared > 60);
}

TEST_CASE("square roots of 17 in Z_2") {
  auto exts = extend_to_number_field(P("X^2 - 17"), 2);
  REQUIRE(exts.size() == 2);
  const unsigned K = 48;
  auto roots = oracle::sqrt_mod_2k(17, K);
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) CHECK(v2_capped(Integer(r * r - 17), K) >= K - 1);
  PolySampler s(2, kDefaultSeed, "extensions.sqrt17");
  for (int t = 0; t < 100; ++t) {
    Poly g = s.any(3);
    if (g.is_constant()) continue;
    // clear denominators so g(r) is computed in Z / 2^K
    Integer den = 1;
    for (const auto& c : g.coefficients()) den = lcm(den, Integer(c.get_den()));
    std::vector<long> expect;
    for (const auto& r : roots) {
      Integer acc = 0;
      for (int j = g.degree(); j >= 0; --j) acc = acc * r + Integer(g.coeff(j) * den);
      expect.push_back(v2_capped(acc, K - 8));
    }
    std::sort(expect.begin(), expect.end());
    if (expect.back() >= static_cast<long>(K) - 8) continue;
    auto got = sorted_valuations(exts, g);
    long vden = padic_valuation(den, 2);
    CAPTURE(g.str());
    CHECK(got[0] == Value(expect[0] - vden));
    CHECK(got[1] == Value(expect[1] - vden));
  }
  CHECK(sorted_valuations(exts, P("X - 9")) == std::vector<Value>{Value(1), Value(5)});
}

TEST_CASE("valuation laws on random elements") {
  for (const auto& m : corpus::min_polys()) {
    Poly f = parse_poly(m.poly);
    auto exts = extend_to_number_field(f, m.p);
    PolySampler s(m.p, kDefaultSeed, "extensions.laws." + m.poly);
    for (const auto& e : exts) {
      CHECK(e->valuation(f).is_infinite());
      CHECK(e->valuation(f * P("X + 1")).is_infinite());
      CHECK(e->valuation(Poly(Rational(m.p))) == Value(1));
      for (int t = 0; t < 25; ++t) {
        Poly g = s.any(f.degree() + 2), h = s.any(f.degree() + 2);
        Value vg = e->valuation(g), vh = e->valuation(h);
        CHECK(e->valuation(g * h) == vg + vh);
        if (!(g + h).is_zero()) CHECK(e->valuation(g + h) >= min(vg, vh));
        if (vg.is_finite()) CHECK(Rational(vg.standard() * e->ramification()).get_den() == 1);
      }
    }
  }
}

TEST_CASE("sum of e times the valuation of the norm") {
  // sum over extensions of e f v(g) = v_p(N(g))
  for (const auto& m : corpus::min_polys()) {
    Poly f = parse_poly(m.poly);
    auto exts = extend_to_number_field(f, m.p);
    PolySampler s(m.p, kDefaultSeed, "extensions.norm." + m.poly);
    for (int t = 0; t < 20; ++t) {
      Poly g = s.any(f.degree() - 1);
      Rational norm = characteristic_polynomial(f, g % f).coeff(0);
      if (norm == 0) continue;
      Rational sum = 0;
      for (const auto& e : exts) sum += e->valuation(g).standard() * e->local_degree();
      CHECK(sum == padic_valuation(norm, m.p));
    }
  }
}

TEST_CASE("approximations refine on demand") {
  auto exts = extend_to_number_field(P("X^2 - 17"), 2);
  for (const auto& e : exts) {
    auto a = e->approximation_at_least(Value(20));
    CHECK(a.value >= Value(20));
    CHECK(a.key.degree() == 1);
    CHECK(e->valuation(a.key) == a.value);
    CHECK_FALSE(e->describe().empty());
  }
  auto one = extend_to_number_field(P("X^3 - 2"), 2);
  REQUIRE(one.size() == 1);
  auto a = one[0]->approximation();
  CHECK(a.key.degree() == 3);
  CHECK(one[0]->valuation(a.key) == a.value);
  CHECK(one[0]->approximation_at_least(Value(9)).value >= Value(9));
}

TEST_CASE("algebraic numbers") {
  auto exts = extend_to_number_field(P("X^2 - 2"), 2);
  AlgebraicNumber a(exts[0]);
  CHECK(a.minimal_polynomial() == P("X^2 - 2"));
  CHECK(AlgebraicNumber(exts[0], P("Y + 1")).minimal_polynomial() == P("X^2 - 2X - 1"));
  CHECK(AlgebraicNumber(exts[0], P("Y^2")).minimal_polynomial() == P("X - 2"));
  CHECK(AlgebraicNumber(exts[0], P("Y^2")).degree() == 1);
  CHECK(a.is_root_of(P("X^4 - 4")));
  CHECK(a.evaluate(P("X^3")) == P("2X"));
  CHECK(a.valuation_at(P("X")) == Value(Rational(1, 2)));
  CHECK(a.element_valuation(P("X + 2")) == Value(Rational(1, 2)));
  CHECK(algebraic_valuation(a, P("X^2 + 2")) == Value(2));

  auto roots = small_roots_in_field(a, P("X^2 - 2"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].representative() == P("X"));
  CHECK(roots[1].representative() == P("-X"));

  auto cube = extend_to_number_field(P("X^3 - 2"), 5);
  REQUIRE(cube.size() == 2);
  for (const auto& e : cube) CHECK(small_roots_in_field(AlgebraicNumber(e), P("X^3 - 2")).size() == 1);
}

TEST_CASE("root distances from the Taylor polygon") {
  auto exts = extend_to_number_field(P("X^2 - 2"), 2);
  AlgebraicNumber a(exts[0]);
  CHECK(root_distances(a, P("X^2 - 2")) == std::vector<Value>{Value(Rational(3, 2)), Value::infinity()});
  CHECK(root_distances(a, P("X")) == std::vector<Value>{Value(Rational(1, 2))});
  CHECK(delta_via_roots(a, Value(Rational(3, 4)), P("X^2 - 2")) == Value(Rational(3, 4)));
  CHECK(delta_via_roots(a, Value(Rational(3, 4)), P("X")) == Value(Rational(1, 2)));
  CHECK(delta_via_roots(a, Value(Rational(3, 4)), P("X - 1")) == Value(0));
  CHECK(root_difference_valuations(P("X^2 - 2"), P("X^2 - 2"), 2) ==
        std::vector<Value>{Value(Rational(3, 2)), Value(Rational(3, 2))});
  auto mixed = root_difference_valuations(P("X"), P("X^2 - 2"), 2);
  CHECK(mixed == std::vector<Value>{Value(Rational(1, 2)), Value(Rational(1, 2))});

  // distances to the roots of f agree with the valuation of f(a) summed
  PolySampler s(2, kDefaultSeed, "extensions.distances");
  for (int t = 0; t < 50; ++t) {
    Poly f = s.monic(1 + t % 4);
    auto ds = root_distances(a, f);
    CHECK(ds.size() == static_cast<std::size_t>(f.degree()));
    Value sum(0);
    for (const auto& d : ds) sum = sum + d;
    CHECK(sum == a.valuation_at(f));
  }
}

TEST_CASE("concurrent valuations agree with serial ones") {
  auto exts = extend_to_number_field(P("X^4 + 2X^3 - 4X^2 - 4X + 12"), 2);
  PolySampler s(2, kDefaultSeed, "extensions.threads");
  std::vector<Poly> gs;
  for (int t = 0; t < 64; ++t) gs.push_back(s.any(8));
  auto fresh = extend_to_number_field(P("X^4 + 2X^3 - 4X^2 - 4X + 12"), 2);
  std::vector<std::vector<Value>> par(4, std::vector<Value>(gs.size()));
  std::vector<std::thread> threads;
  for (int k = 0; k < 4; ++k)
    threads.emplace_back([&, k] {
      for (std::size_t i = 0; i < gs.size(); ++i) par[k][(i + 16 * k) % gs.size()] =
          fresh[0]->valuation(gs[(i + 16 * k) % gs.size()]);
    });
  for (auto& t : threads) t.join();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Value v = exts[0]->valuation(gs[i]);
    for (int k = 0; k < 4; ++k) CHECK(par[k][i] == v);
  }
}

TEST_CASE("input errors") {
  try {
    extend_to_number_field(P("X^2 - 4"), 2);
    FAIL("no error");
  } catch (const ReducibleError& e) {
    CHECK(e.poly() == P("X^2 - 4"));
    CHECK(P("X^2 - 4") % e.factor() == Poly());
    CHECK(e.factor().degree() == 1);
  }
  CHECK_THROWS_AS(extend_to_number_field(P("X^4 + 4"), 3), ReducibleError);
  CHECK_THROWS_AS(extend_to_number_field(P("X^9 - 2"), 2), FieldLimitError);
  CHECK_THROWS_AS(extend_to_number_field(P("2X^2 - 1"), 2), std::invalid_argument);
  CHECK_THROWS_AS(extend_to_number_field(P("X^2 - 1/2"), 2), std::invalid_argument);
  CHECK_THROWS_AS(extend_to_number_field(P("X^2 - 2"), 6), std::invalid_argument);
  CHECK_NOTHROW(extend_to_number_field(P("X^2 - 1/3"), 2));
}
