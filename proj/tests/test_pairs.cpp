#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "vforge/pairs.hpp"
#include "vforge/parse.hpp"
#include "vforge/sampler.hpp"
#include "vforge/verify.hpp"

using namespace vforge;

namespace {

Poly P(const char* s) { return parse_poly(s); }
Value V(const char* s) { return parse_value(s); }

AlgebraicNumber root(const char* m, long p, std::size_t index = 0, const char* rep = "Y") {
  return AlgebraicNumber(extend_to_number_field(P(m), p).at(index), P(rep));
}

Chain chain_named(const std::string& name) {
  for (const auto& e : corpus::chains())
    if (e.name == name) return parse_chain(e.text);
  throw std::invalid_argument(name);
}

}  // namespace

TEST_CASE("pair evaluation examples") {
  PairOfDefinition s2{root("X^2 - 2", 2), V("3/4")};
  auto a = pair_eval(s2, P("X^2 - 2"));
  CHECK(a.value == V("3/2"));
  CHECK(a.S == std::vector<int>{2});
  auto b = pair_eval(s2, P("X - 3"));
  CHECK(b.value == V("0"));
  CHECK(b.S == std::vector<int>{0});
  PairOfDefinition zero{root("X", 2), V("1 + 1t")};
  auto c = pair_eval(zero, P("X^2 + 2X + 4"));
  CHECK(c.value == V("2"));
  CHECK(c.S == std::vector<int>{0});
  auto d = pair_eval(s2, NFPoly{P("-Y"), P("1")});
  CHECK(d.value == V("3/4"));
  CHECK(d.S == std::vector<int>{1});
  CHECK_THROWS(pair_eval(s2, Poly()));
}

TEST_CASE("pair valuations are multiplicative and ultrametric") {
  for (const auto& [name, c] : corpus::built()) {
    const Poly& q = c.key(c.size() - 1);
    for (const auto& ext : extend_to_number_field(q, c.prime())) {
      PairOfDefinition pair{AlgebraicNumber(ext), c.epsilon_at(c.size() - 1)};
      PolySampler s(c.prime(), kDefaultSeed, "pairs.laws." + name);
      for (int r = 0; r < 30; ++r) {
        Poly f = s.any(6), g = s.any(6);
        Value vf = pair_eval(pair, f).value, vg = pair_eval(pair, g).value;
        CHECK(pair_eval(pair, f * g).value == vf + vg);
        if (!(f + g).is_zero()) CHECK(pair_eval(pair, f + g).value >= min(vf, vg));
      }
    }
  }
}

TEST_CASE("max element law for rational centers") {
  for (const auto& [name, c] : corpus::built()) {
    const Poly& q = c.key(c.size() - 1);
    for (const auto& ext : extend_to_number_field(q, c.prime())) {
      AlgebraicNumber a(ext);
      Value delta = c.epsilon_at(c.size() - 1);
      PairOfDefinition pair{a, delta};
      PolySampler s(c.prime(), kDefaultSeed, "pairs.max." + name);
      for (int r = 0; r < 60; ++r) {
        Rational cc = s.center();
        Value w = pair_eval(pair, Poly::linear(cc)).value;
        CHECK(w <= delta);
        CHECK((w == delta) == (a.valuation_at(Poly::linear(cc)) >= delta));
      }
    }
  }
}

TEST_CASE("pair equivalence") {
  AlgebraicNumber r2 = root("X^2 - 2", 2), m2 = root("X^2 - 2", 2, 0, "-Y");
  CHECK(center_distance(r2, m2) == V("3/2"));
  CHECK(pairs_equivalent({r2, V("3/4")}, {m2, V("3/4")}));
  CHECK_FALSE(pairs_equivalent({r2, V("3/4")}, {m2, V("1")}));
  CHECK_FALSE(pairs_equivalent({r2, V("2")}, {m2, V("2")}));
  AlgebraicNumber w1 = root("X^2 + X + 1", 2), w2 = root("X^2 + X + 1", 2, 0, "-Y - 1");
  CHECK(center_distance(w1, w2) == V("0"));
  CHECK_FALSE(pairs_equivalent({w1, V("1")}, {w2, V("1")}));
  CHECK(pairs_equivalent({w1, V("0")}, {w2, V("0")}));
  // a rational center against an algebraic one
  AlgebraicNumber zero = root("X", 2);
  CHECK(center_distance(r2, zero) == V("1/2"));
  CHECK(pairs_equivalent({r2, V("1/2")}, {zero, V("1/2")}));
  CHECK_FALSE(pairs_equivalent({r2, V("3/4")}, {zero, V("3/4")}));
}

TEST_CASE("centers in unrelated fields are rejected") {
  AlgebraicNumber r2 = root("X^2 - 2", 2), r3 = root("X^2 - 3", 2);
  CHECK_THROWS_AS(center_distance(r2, r3), IncomparableError);
  CHECK_THROWS_AS(pairs_equivalent({r2, V("1")}, {r3, V("1")}), IncomparableError);
}

TEST_CASE("conjugates in separate extensions are compared through the distance multiset") {
  // the two roots of X^2 - 17 lie in different 2-adic completions
  auto exts = extend_to_number_field(P("X^2 - 17"), 2);
  AlgebraicNumber a(exts[0]), b(exts[1]);
  CHECK(distance_at_least(a, b, V("1")));
  CHECK_FALSE(distance_at_least(a, b, V("2")));
}

TEST_CASE("minimal pairs") {
  AlgebraicNumber r2 = root("X^2 - 2", 2);
  Rational c;
  CHECK(best_rational_distance(r2, V("10"), &c) == V("1/2"));
  CHECK(r2.valuation_at(Poly::linear(c)) == V("1/2"));
  auto exts = extend_to_number_field(P("X^2 - 17"), 2);
  Value b = best_rational_distance(AlgebraicNumber(exts[0]), V("10"), &c);
  CHECK(b >= V("10"));
  CHECK(AlgebraicNumber(exts[0]).valuation_at(Poly::linear(c)) >= V("10"));

  auto m = is_minimal_pair({r2, V("3/4")});
  CHECK(m.minimal);
  CHECK(m.degree == 2);
  CHECK_FALSE(m.certificate.empty());
  CHECK_FALSE(is_minimal_pair({r2, V("1/2")}).minimal);
  CHECK_FALSE(is_minimal_pair({r2, V("1/4")}).minimal);
  Chain c2 = chain_named("C2");
  auto mc = is_minimal_pair({r2, V("3/4")}, &c2);
  CHECK(mc.minimal);
  REQUIRE(mc.chain_degree.has_value());
  CHECK(*mc.chain_degree == 2);
  CHECK(is_minimal_pair({root("X", 2), V("5")}).minimal);
}

TEST_CASE("common extension checks") {
  Chain c2 = chain_named("C2");
  AlgebraicNumber r2 = root("X^2 - 2", 2);
  auto v = common_extension_check(c2, {r2, V("3/4")});
  CHECK(v.ok);
  CHECK(v.checked > 100);
  CHECK_FALSE(v.witness.has_value());
  CHECK_THROWS_AS(common_extension_check(c2, {r2, V("1")}), std::invalid_argument);
  CHECK_THROWS_AS(common_extension_check(c2, {root("X^2 - 3", 2), V("3/4")}), std::invalid_argument);

  Chain c3 = chain_named("C3");
  CHECK(common_extension_check(c3, {r2, c3.epsilon_at(1)}).ok);
}

TEST_CASE("common extension classes") {
  struct Expect {
    const char* name;
    int classes;
    int roots;
  };
  for (const auto& e : {Expect{"C2", 1, 2}, Expect{"C4", 2, 2}, Expect{"cube2", 3, 3}, Expect{"C5", 4, 4},
                        Expect{"gauss2", 1, 1}}) {
    auto rep = enumerate_common_extensions(chain_named(e.name));
    CAPTURE(e.name);
    CHECK(rep.all_pass);
    CHECK(rep.class_count == e.classes);
    CHECK(rep.root_count == e.roots);
    for (const auto& x : rep.extensions) CHECK(x.minimality.minimal);
  }
}

TEST_CASE("root lemmas") {
  for (const auto& [name, c] : corpus::built()) {
    for (std::size_t j = 0; j + 1 < c.size(); ++j)
      for (const auto& l : verify_root_lemmas(c, j)) {
        CAPTURE(name);
        CAPTURE(l.name);
        CHECK_MESSAGE(l.ok, l.detail);
      }
    CHECK_THROWS_AS(verify_root_lemmas(c, c.size() - 1), std::invalid_argument);
  }
  auto names = verify_root_lemmas(chain_named("C2"), 0);
  std::vector<std::string> got;
  for (const auto& l : names) got.push_back(l.name);
  CHECK(got == std::vector<std::string>{"resultant_identity", "value_sum", "value_each", "proximity",
                                        "strict_inequality"});
}
