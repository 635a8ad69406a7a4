#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oracles/oracles.hpp"
#include "vforge/chain_io.hpp"
#include "vforge/factor_q.hpp"
#include "vforge/newton.hpp"
#include "vforge/parse.hpp"
#include "vforge/resultant.hpp"
#include "vforge/sampler.hpp"
#include "vforge/verify.hpp"

using namespace vforge;

namespace {

std::map<std::string, int> factor_map(const FiniteField& F, const std::vector<std::pair<FFPoly, int>>& fs) {
  std::map<std::string, int> m;
  for (const auto& [g, e] : fs) m[ff::str(F, g)] += e;
  return m;
}

}  // namespace

TEST_CASE("value order and formatting") {
  Value a(Rational(3, 2)), b(Rational(3, 2), Rational(1, 2)), c(Rational(2), Rational(-5));
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < Value::infinity());
  CHECK(a + b == Value(3, Rational(1, 2)));
  CHECK(b - a == Value(0, Rational(1, 2)));
  CHECK(b.scaled(2) == Value(3, 1));
  CHECK(a.str() == "3/2");
  CHECK(b.str() == "3/2 + 1/2t");
  CHECK(b.file_str() == "3/2 + 1/2 t");
  CHECK(Value::infinity().str() == "inf");
  CHECK(Value::infinity() + a == Value::infinity());
  CHECK(a.is_rational());
  CHECK_FALSE(b.is_rational());
  for (const auto& v : {a, b, c, Value(0, -1), Value::infinity()}) {
    CHECK(parse_value(v.str()) == v);
    CHECK(parse_value(v.file_str()) == v);
  }
  CHECK(parse_value("(3/2, 1)") == Value(Rational(3, 2), 1));
  CHECK(parse_value("-t") == Value(0, -1));
}

TEST_CASE("rational helpers") {
  CHECK(padic_valuation(Rational(48), 2) == 4);
  CHECK(padic_valuation(Rational(5, 12), 2) == -2);
  CHECK(padic_valuation(Rational(-27, 7), 3) == 3);
  CHECK_THROWS(padic_valuation(Rational(0), 3));
  CHECK(residue_mod(Rational(1, 3), 5) == 2);
  CHECK(rational_gcd(Rational(1, 2), Rational(2, 3)) == Rational(1, 6));
  CHECK(binomial(10, 3) == 120);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("polynomial parsing and printing round trip") {
  PolySampler s(3, kDefaultSeed, "core.parse");
  for (int i = 0; i < 200; ++i) {
    Poly f = s.any(7);
    CHECK(parse_poly(f.str()) == f);
  }
  CHECK(parse_poly("3/2X") == Poly({0, Rational(3, 2)}));
  CHECK(parse_poly("2(X+1)^2") == Poly({2, 4, 2}));
  CHECK(parse_poly("Y^2 - 2", 1) == Poly({-2, 0, 1}));
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_poly("X^2 + * 3");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_poly("X / 0"), ParseError);
  CHECK_THROWS_AS(parse_poly("X^-1"), ParseError);
  CHECK_THROWS_AS(parse_value("1/2 +"), ParseError);
  try {
    parse_chain_spec("p = 2\nQ0: X @ 1/2\nQ1 X^2 - 2 @ 3/2\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_chain_spec("p = 2\nQ0: X @ 1/2\nQ1: X^2 - 2 @ 3/\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 4);
  }
}

TEST_CASE("division, gcd, expansions and Hasse derivatives") {
  PolySampler s(2, kDefaultSeed, "core.poly");
  for (int i = 0; i < 100; ++i) {
    Poly f = s.any(8), g = s.any(4);
    auto [q, r] = divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    Poly h = s.monic(2);
    Poly gg = gcd(f * h, g * h);
    CHECK((f * h) % gg == Poly());
    CHECK((g * h) % h == Poly());
    CHECK(gg.is_monic());
    CHECK(gg.degree() >= 2);

    Poly k = s.monic(1 + i % 3);
    auto ex = q_expansion(f, k);
    Poly back;
    for (std::size_t j = ex.size(); j-- > 0;) back = back * k + ex[j];
    CHECK(back == f);
    for (const auto& c : ex) CHECK(c.degree() < k.degree());

    Rational a = s.center(), t = s.center();
    Rational sum = 0;
    for (int b = 0; b <= f.degree(); ++b) sum += hasse_derivative(f, b)(a) * oracle::pow_rat(t, b);
    CHECK(sum == f(a + t));
  }
  CHECK(hasse_derivative(parse_poly("X^4"), 2) == parse_poly("6X^2"));
  CHECK(pow(Poly::linear(1), 3) == parse_poly("X^3 - 3X^2 + 3X - 1"));
}

TEST_CASE("resultant against the Sylvester determinant") {
  PolySampler s(3, kDefaultSeed, "core.resultant");
  for (int i = 0; i < 80; ++i) {
    Poly f = s.any(5), g = s.any(5), h = s.any(3);
    if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
    Rational r = resultant(f, g);
    CHECK(r == oracle::sylvester_resultant(f, g));
    Rational sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
    CHECK(resultant(g, f) == sign * r);
    CHECK(resultant(f, g * h) == r * resultant(f, h));
  }
  CHECK(resultant(parse_poly("X^2 - 2"), parse_poly("X^2 + 1")) == 9);
  CHECK(resultant(parse_poly("X^2 - 1"), parse_poly("X - 1")) == 0);
}

TEST_CASE("characteristic polynomials and derived resultants") {
  CHECK(characteristic_polynomial(parse_poly("X^2 - 2"), parse_poly("X + 1")) == parse_poly("X^2 - 2X - 1"));
  CHECK(characteristic_polynomial(parse_poly("X^3 - 2"), parse_poly("X^2")) == parse_poly("X^3 - 4"));
  // differences of roots of X^2 - 2 with themselves: 0, 0, +-2 sqrt2
  Poly d = difference_resultant(parse_poly("X^2 - 2"), parse_poly("X^2 - 2"));
  CHECK(d.monic() == parse_poly("X^4 - 8X^2"));
  std::vector<Rational> xs{0, 1, 2, 5}, ys{1, 3, -2, 7};
  Poly p = interpolate(xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(p(xs[i]) == ys[i]);
}

TEST_CASE("Newton polygons against the chord-hull oracle") {
  for (long p : {2L, 3L, 5L}) {
    PolySampler s(p, kDefaultSeed, "core.newton");
    for (int i = 0; i < 100; ++i) {
      Poly f = s.any(7);
      if (f.degree() < 1) continue;
      std::vector<std::pair<long, Rational>> pts;
      for (int j = 0; j <= f.degree(); ++j)
        if (f.coeff(j) != 0) pts.emplace_back(j, Rational(padic_valuation(f.coeff(j), p)));
      NewtonPolygon np = newton_polygon(f, p);
      CHECK(np.root_valuations() == oracle::hull_slopes(pts));
      CHECK(np.zero_roots() == pts.front().first);

      Poly g = s.any(4);
      if (g.degree() < 1) continue;
      auto rf = root_valuation_multiset(f, p), rg = root_valuation_multiset(g, p);
      rf.insert(rf.end(), rg.begin(), rg.end());
      std::sort(rf.begin(), rf.end());
      CHECK(root_valuation_multiset(f * g, p) == rf);
    }
  }
  auto rv = root_valuation_multiset(parse_poly("X^3 - 2X^2"), 2);
  REQUIRE(rv.size() == 3);
  CHECK(rv[0] == Value(1));
  CHECK(rv[2] == Value::infinity());
}

TEST_CASE("finite field factorization against brute force") {
  std::vector<FieldPtr> fields{FiniteField::prime_field(2), FiniteField::prime_field(3),
                               FiniteField::prime_field(5), FiniteField::from_modulus(2, {1, 1, 1}),
                               FiniteField::from_modulus(3, {1, 0, 1})};
  for (const auto& F : fields) {
    int maxd = F->order() > 4 ? 3 : 5;
    if (F->degree() > 1) maxd = 3;
    for (int d = 1; d <= maxd; ++d)
      for (const auto& f : oracle::all_monic(*F, d)) {
        CHECK(ff::is_irreducible(*F, f) == oracle::ff_irreducible(*F, f));
        auto fs = ff::factor(*F, f);
        FFPoly prod = ff::constant(*F, F->one());
        for (const auto& [g, e] : fs)
          for (int k = 0; k < e; ++k) prod = ff::mul(*F, prod, g);
        CHECK(prod == f);
        CHECK(factor_map(*F, fs) == factor_map(*F, oracle::ff_trial_factor(*F, f)));
      }
  }
}

TEST_CASE("finite field arithmetic") {
  auto F = FiniteField::from_modulus(2, {1, 1, 0, 1});  // F_8
  CHECK(F->order() == 8);
  FElem t = F->generator();
  CHECK(F->is_one(F->pow(t, 7)));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    FElem a = F->random(rng);
    if (F->is_zero(a)) continue;
    CHECK(F->is_one(F->mul(a, F->inv(a))));
    CHECK(F->pow(a, Integer(8)) == a);
  }
  auto big = FiniteField::prime_field(3);
  FFPoly psi{{{1}, {2}, {0}, {1}}};  // y^3 - y + 1, irreducible over F_3
  REQUIRE(ff::is_irreducible(*big, psi));
  CHECK(extend_field(big, psi, 3).field->degree() == 3);
  CHECK_THROWS_AS(extend_field(big, psi, 2), FieldLimitError);
}

TEST_CASE("rational factorization") {
  CHECK(is_irreducible_over_q(parse_poly("X^4 + 1")));
  CHECK(is_irreducible_over_q(parse_poly("X^2 - 17")));
  CHECK(is_irreducible_over_q(parse_poly("X^6 + X + 1")));
  auto f = find_rational_factor(parse_poly("X^4 + 4"));
  REQUIRE(f.has_value());
  CHECK(parse_poly("X^4 + 4") % *f == Poly());
  PolySampler s(5, kDefaultSeed, "core.factor_q");
  for (int i = 0; i < 30; ++i) {
    Poly a = s.monic(1 + i % 3), b = s.monic(1 + i % 4);
    auto g = find_rational_factor(a * b);
    REQUIRE(g.has_value());
    CHECK((a * b) % *g == Poly());
    CHECK(g->degree() > 0);
    CHECK(g->degree() < (a * b).degree());
  }
}
