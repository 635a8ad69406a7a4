#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles/oracles.hpp"
#include "vforge/chain_io.hpp"
#include "vforge/parse.hpp"
#include "vforge/sampler.hpp"
#include "vforge/verify.hpp"

using namespace vforge;

namespace {

Chain chain_named(const std::string& name) {
  for (const auto& e : corpus::chains())
    if (e.name == name) return parse_chain(e.text);
  throw std::invalid_argument(name);
}

Value V(const char* s) { return parse_value(s); }
Poly P(const char* s) { return parse_poly(s); }

std::string invariant_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ChainError& e) {
    return e.invariant();
  }
  return "";
}

}  // namespace

TEST_CASE("C2 golden values") {
  Chain c = chain_named("C2");
  CHECK(c.size() == 2);
  CHECK(c.d() == 2);
  CHECK(c.eval(P("X^4 + 4")) == V("3"));
  CHECK(c.truncate(0, P("X^4 + 4")) == V("2"));
  CHECK(c.truncate(1, P("X^4 + 4")) == V("3"));
  CHECK(c.eval(P("X")) == V("1/2"));
  CHECK(c.eval(P("X^2 - 2")) == V("3/2"));
  CHECK(c.eval(P("X - 1")) == V("0"));
  CHECK(c.eval(P("2")) == V("1"));
  CHECK(c.eval(Poly()) == Value::infinity());
  CHECK(c.epsilon_at(0) == V("1/2"));
  CHECK(c.epsilon_at(1) == V("3/4"));
  CHECK(c.epsilon(P("X - 1")) == V("0"));
  CHECK(c.ramification(0) == 2);
  CHECK(c.ramification(1) == 1);
  CHECK(c.classify() == Classification::ResidueTranscendental);
  ChainData d = c.data();
  CHECK(d.d == 2);
  CHECK(d.group_generator == Rational(1, 2));
  CHECK_FALSE(d.has_tau);
  CHECK(d.residue_field_degree == 1);
}

TEST_CASE("C4 and C3 golden values") {
  Chain c4 = chain_named("C4");
  CHECK(c4.epsilon_at(1) == V("1"));
  CHECK(c4.eval(P("X^3 - 1")) == V("1"));
  CHECK(c4.data().residue_field_degree == 2);
  CHECK(c4.data().group_generator == 1);

  Chain c3 = chain_named("C3");
  CHECK(c3.classify() == Classification::ValueTranscendental);
  CHECK(c3.eval(P("X^2 - 2")) == V("3/2 + 1t"));
  CHECK(c3.eval(P("(X^2 - 2)^2 + 8")) == V("3"));
  CHECK(c3.data().has_tau);
  CHECK(c3.epsilon_at(1) == V("3/4 + 1/2t"));
}

TEST_CASE("deep chain C5") {
  Chain c5 = chain_named("C5");
  CHECK(c5.d() == 4);
  CHECK(c5.eval(c5.key(2)) == V("4"));
  // the level-1 truncation underestimates the last key
  CHECK(c5.truncate(1, c5.key(2)) < V("4"));
  CHECK(c5.epsilon_at(0) < c5.epsilon_at(1));
  CHECK(c5.epsilon_at(1) < c5.epsilon_at(2));
}

TEST_CASE("completeness and monotone truncations on the corpus") {
  for (const auto& [name, c] : corpus::built()) {
    PolySampler s(c.prime(), kDefaultSeed, "maclane.completeness." + name);
    for (int r = 0; r < 60; ++r) {
      Poly f = s.any(8);
      Value best = c.truncate(0, f);
      for (std::size_t i = 1; i < c.size(); ++i) {
        Value t = c.truncate(i, f);
        CHECK(best <= t);
        best = t;
        CHECK(c.eval_level(i, f) <= c.eval(f));
      }
      CHECK(best == c.eval(f));
    }
  }
}

TEST_CASE("epsilon of keys and of linear polynomials") {
  for (const auto& [name, c] : corpus::built()) {
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c.epsilon(c.key(i)) == c.epsilon_at(i));
    CHECK(c.epsilon(Poly::linear(0)) == c.eval(Poly::x()));
  }
}

TEST_CASE("residual polynomials") {
  Chain c2 = chain_named("C2");
  auto r = c2.residual_polynomial(P("X^4 + 4"));
  CHECK(r.str() == "y^2 + 1");
  CHECK(r.value == V("3"));
  CHECK(c2.residual_polynomial(P("X^2 - 2")).str() == "1");
  Chain i3 = chain_named("inert3");
  auto r3 = i3.residual_polynomial(P("X^4 + 2X^2 + 10"));
  CHECK(r3.field->degree() == 2);
  CHECK(r3.poly.degree() == 2);
  CHECK(r3.value == V("2"));
  CHECK(i3.residue_field()->degree() == 2);
}

TEST_CASE("key certificates") {
  Chain c2 = chain_named("C2");
  Chain x12 = c2.prefix(1);
  auto k = x12.is_key(P("X^2 - 2"), V("3/2"));
  CHECK(k.is_key);
  REQUIRE(k.term_values.size() >= 2);
  CHECK(k.term_values.front() == V("1"));
  CHECK(k.term_values.back() == V("1"));
  CHECK_FALSE(x12.is_key(P("X^2")).is_key);
  CHECK_FALSE(x12.is_key(P("X^2 - 1")).is_key);
  CHECK(invariant_of([&] { c2.is_key(P("X^3 - 2")); }) == "is_key.degree");
  CHECK(invariant_of([&] { c2.is_key(P("X^2 + 2")); }) == "is_key.degree");
  auto five = c2.is_key(chain_named("C5").key(2), V("4"));
  CHECK(five.is_key);
  CHECK(*five.epsilon > *five.epsilon_last);

  Chain bad = Chain(2).augment(Poly::linear(1), V("2"));
  auto nk = bad.is_key(P("X^2 - 17"), V("4"));
  CHECK_FALSE(nk.is_key);
  CHECK(nk.failure == "inhomogeneous");
  CHECK(nk.witness.find("{4,3,4}") != std::string::npos);
}

TEST_CASE("augmentation errors") {
  Chain base(2);
  CHECK(invariant_of([&] { base.augment(P("X^2 - 2"), V("1")); }) == "chain.first_key_linear");
  Chain x12 = base.augment(Poly::x(), V("1/2"));
  CHECK(invariant_of([&] { x12.augment(P("X^2 - 2"), V("1")); }) == "augment.beta_not_above");
  CHECK(invariant_of([&] { x12.augment(P("2X^2 - 2"), V("3/2")); }) == "augment.degree");
  CHECK(invariant_of([&] { x12.augment(P("X^2 - 1"), V("3/2")); }) == "augment.key_test");
  Chain c2 = x12.augment(P("X^2 - 2"), V("3/2"));
  CHECK(invariant_of([&] { c2.augment(P("X^3 - 2"), V("5")); }) == "augment.degree");
  CHECK(invariant_of([&] { c2.augment(P("X^2 - 2"), V("5")); }) == "augment.degree");
  CHECK_THROWS_AS(parse_chain("p = 4\nQ0: X @ 1\n"), ParseError);
}

TEST_CASE("print and parse round trip") {
  for (const auto& [name, c] : corpus::built()) {
    Chain back = parse_chain(print_chain(c));
    CHECK(back == c);
    CHECK(print_chain(back) == print_chain(c));
  }
  Chain from_file = load_chain_file(std::string(VFORGE_TEST_DATA) + "/c3.vchain");
  CHECK(from_file == chain_named("C3"));
}

TEST_CASE("lifted keys extend the chain") {
  int extended = 0;
  for (const auto& [name, full] : corpus::built())
    for (std::size_t n = 1; n <= full.size(); ++n) {
      Chain c = full.prefix(n);
      if (c.classify() == Classification::ValueTranscendental) continue;
      const FieldPtr& F = c.residue_field();
      // first irreducible psi != y of degree 1 and of degree 2
      std::vector<FFPoly> psis;
      for (int deg = 1; deg <= 2; ++deg)
        for (const auto& psi : oracle::all_monic(*F, deg))
          if (!F->is_zero(psi.c[0]) && ff::is_irreducible(*F, psi)) {
            psis.push_back(psi);
            break;
          }
      REQUIRE(psis.size() == 2);
      long e = c.ramification(c.size() - 1);
      for (const auto& psi : psis) {
        Poly q = c.lift_key(psi);
        CHECK(q.is_monic());
        CHECK(q.degree() == e * psi.degree() * c.d());
        if (q.degree() == c.d()) continue;
        auto cert = c.is_key(q);
        CHECK_MESSAGE(cert.is_key, name << " " << q.str());
        CHECK(c.augment(q, c.eval(q) + Value(1)).size() == c.size() + 1);
        ++extended;
      }
    }
  CHECK(extended > 20);
}
