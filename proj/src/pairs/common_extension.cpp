#include <algorithm>
#include <functional>

#include "vforge/pairs.hpp"
#include "vforge/sampler.hpp"

namespace vforge {

namespace {

// Products of the earlier keys with total degree below d.
void key_products(const Chain& chain, std::size_t i, int d, const Poly& acc, bool used,
                  const std::function<bool(const Poly&)>& visit, bool& stop) {
  if (stop) return;
  if (i + 1 >= chain.size()) {
    if (used && !visit(acc)) stop = true;
    return;
  }
  Poly cur = acc;
  bool u = used;
  for (;;) {
    key_products(chain, i + 1, d, cur, u, visit, stop);
    if (stop) return;
    if (cur.degree() + chain.degree(i) >= d) return;
    cur = cur * chain.key(i);
    u = true;
  }
}

}  // namespace

CommonExtensionVerdict common_extension_check(const Chain& chain, const PairOfDefinition& pair,
                                              const CheckOptions& options) {
  if (chain.empty()) throw std::invalid_argument("common extension check on an empty chain");
  std::size_t last = chain.size() - 1;
  const Poly& q = chain.key(last);
  if (!pair.center.is_root_of(q))
    throw std::invalid_argument("center is not a root of Q" + std::to_string(last) + " = " + q.str());
  if (pair.delta != chain.epsilon_at(last))
    throw std::invalid_argument("delta " + pair.delta.str() + " differs from epsilon_" + std::to_string(last) +
                                " = " + chain.epsilon_at(last).str());

  CommonExtensionVerdict out;
  int d = chain.d();
  auto compare = [&](const Poly& g, const char* family) {
    ++out.checked;
    Value w = chain.eval(g);
    Value v = pair.center.valuation_at(g);
    if (w == v) return true;
    out.ok = false;
    out.family = family;
    out.witness = g;
    out.detail = "w(g) = " + w.str() + " but v(g(a)) = " + v.str();
    return false;
  };

  bool stop = false;
  key_products(chain, 0, d, Poly(1), false, [&](const Poly& g) { return compare(g, "key_products"); }, stop);
  if (!out.ok) return out;

  for (int k = 1; k < d; ++k) {
    std::vector<long> digits = k <= 6 ? std::vector<long>{-1, 0, 1} : std::vector<long>{0, 1};
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      std::vector<Rational> c;
      for (auto i : idx) c.emplace_back(digits[i]);
      c.emplace_back(1);
      if (!compare(Poly(std::move(c)), "small_coefficients")) return out;
      int i = 0;
      while (i < k && ++idx[i] == digits.size()) idx[i++] = 0;
      if (i == k) break;
    }
  }

  PolySampler rs(chain.prime(), options.seed, "common_extension.random");
  for (int k = 1; k < d; ++k)
    for (int r = 0; r < options.samples; ++r)
      if (!compare(rs.monic(k), "random")) return out;

  PolySampler ps(chain.prime(), options.seed, "common_extension.pair_eval");
  for (int r = 0; r < options.samples; ++r) {
    Poly g = ps.any(2 * d);
    ++out.checked;
    Value w = chain.eval(g);
    Value v = pair_eval(pair, g).value;
    if (w != v) {
      out.ok = false;
      out.family = "pair_eval";
      out.witness = g;
      out.detail = "w(g) = " + w.str() + " but pair value " + v.str();
      return out;
    }
  }
  return out;
}

CommonExtensionReport enumerate_common_extensions(const Chain& chain, const CheckOptions& options) {
  if (chain.empty()) throw std::invalid_argument("common extensions of an empty chain");
  std::size_t last = chain.size() - 1;
  const Poly& q = chain.key(last);
  Value delta = chain.epsilon_at(last);
  ExtendOptions eo;
  eo.max_degree = std::max(eo.max_degree, q.degree());
  eo.max_field_degree = chain.max_field_degree();

  CommonExtensionReport rep;
  rep.root_count = q.degree();
  for (const auto& ext : extend_to_number_field(q, chain.prime(), eo)) {
    ExtensionClass ec{{AlgebraicNumber(ext), delta}, ext->index(), ext->local_degree(), 0, 0, {}, {}, {}};
    auto dist = root_distances(ec.representative.center, q);
    ec.ball_size = static_cast<int>(std::count_if(dist.begin(), dist.end(), [&](const Value& v) { return v >= delta; }));
    if (ec.ball_size == 0 || ec.local_degree % ec.ball_size != 0) {
      rep.all_pass = false;
      ec.check.ok = false;
      ec.check.detail = "ball size " + std::to_string(ec.ball_size) + " does not divide local degree " +
                        std::to_string(ec.local_degree);
    } else {
      ec.classes = ec.local_degree / ec.ball_size;
      ec.check = common_extension_check(chain, ec.representative, options);
    }
    for (const auto& r : small_roots_in_field(ec.representative.center, q)) {
      if (r.representative() == ec.representative.center.representative()) continue;
      ec.in_field_roots.push_back(r.representative());
      if (ec.check.ok) {
        auto v = common_extension_check(chain, {r, delta}, options);
        if (!v.ok) ec.check = v;
      }
    }
    ec.minimality = is_minimal_pair(ec.representative, &chain);
    rep.all_pass = rep.all_pass && ec.check.ok && ec.minimality.minimal;
    rep.class_count += ec.classes;
    rep.extensions.push_back(std::move(ec));
  }
  if (rep.class_count > rep.root_count) rep.all_pass = false;
  return rep;
}

}  // namespace vforge
