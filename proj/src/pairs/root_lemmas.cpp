#include <algorithm>

#include "vforge/newton.hpp"
#include "vforge/pairs.hpp"
#include "vforge/resultant.hpp"
#include "vforge/sampler.hpp"

namespace vforge {

namespace {

// prod over roots a of f of g(a), f monic: the norm of g in Q[Y]/(f).
Rational norm(const Poly& f, const Poly& g) {
  Poly chi = characteristic_polynomial(f, g % f);
  Rational c = chi.coeff(0);
  return f.degree() % 2 ? -c : c;
}

std::string join(const std::vector<Value>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + vs[i].str();
  return s + "}";
}

}  // namespace

std::vector<LemmaCheck> verify_root_lemmas(const Chain& chain, std::size_t j, const CheckOptions& options) {
  if (j + 1 >= chain.size()) throw std::invalid_argument("root lemmas need levels j and j + 1");
  const Poly& qj = chain.key(j);
  const Poly& qn = chain.key(j + 1);
  const Value& beta = chain.beta(j);
  const Value& eps = chain.epsilon_at(j);
  long p = chain.prime();
  long n = qj.degree();
  long s = qn.degree();
  std::vector<LemmaCheck> out;

  {
    // prod_{Q_j(b)=0} Q_{j+1}(b) = (-1)^{n s} prod_{Q_{j+1}(a)=0} Q_j(a)
    Rational lhs = norm(qj, qn);
    Rational rhs = resultant(qn, qj);
    if ((n * s) % 2) rhs = -rhs;
    out.push_back({"resultant_identity", lhs == rhs,
                   "prod Q" + std::to_string(j + 1) + "(b) = " + lhs.get_str() + ", sign * prod Q" +
                       std::to_string(j) + "(a) = " + rhs.get_str()});
  }
  {
    NewtonPolygon np = newton_polygon(value_resultant(qn, qj), p);
    Rational sum = 0;
    for (const auto& r : np.root_valuations()) sum += r;
    bool ok = np.zero_roots() == 0 && Value(sum) == beta.scaled(Rational(s));
    out.push_back({"value_sum", ok,
                   "sum v(Q" + std::to_string(j) + "(a_k)) = " + (np.zero_roots() ? std::string("inf") : sum.get_str()) +
                       ", s * beta = " + beta.scaled(Rational(s)).str()});
  }

  ExtendOptions eo;
  eo.max_degree = std::max(eo.max_degree, qn.degree());
  eo.max_field_degree = chain.max_field_degree();
  auto exts = extend_to_number_field(qn, p, eo);
  {
    bool ok = true;
    std::vector<Value> seen;
    for (const auto& ext : exts) {
      Value v = AlgebraicNumber(ext).valuation_at(qj);
      seen.push_back(v);
      ok = ok && v == beta;
    }
    out.push_back({"value_each", ok, "v(Q" + std::to_string(j) + "(a)) per extension " + join(seen) +
                                         ", beta = " + beta.str()});
  }
  {
    auto diffs = root_difference_valuations(qj, qn, p);
    long close = std::count_if(diffs.begin(), diffs.end(), [&](const Value& v) { return v >= eps; });
    bool ok = close >= s;
    std::vector<Value> nearest;
    for (const auto& ext : exts) {
      Value d = root_distances(AlgebraicNumber(ext), qj).back();
      nearest.push_back(d);
      ok = ok && d >= eps;
    }
    out.push_back({"proximity", ok,
                   std::to_string(close) + " of " + std::to_string(diffs.size()) + " differences >= eps_" +
                       std::to_string(j) + " = " + eps.str() + "; nearest per extension " + join(nearest)});
  }
  {
    PolySampler rs(p, options.seed, "root_lemmas.alpha." + std::to_string(j));
    bool ok = true;
    std::string detail = "sampled " + std::to_string(options.samples) + " rational alpha";
    int tested = 0;
    for (int r = 0; r < options.samples && ok; ++r) {
      Rational alpha = rs.center();
      Rational qa = qj(alpha);
      if (qa == 0) continue;
      auto rv = root_valuation_multiset(qj.shift(alpha), p);
      bool far = rv.back() < eps;
      if (n == 1 && !far) continue;
      ++tested;
      Value v(Rational(padic_valuation(qa, p)));
      if (!(v < beta)) {
        ok = false;
        detail = "alpha = " + alpha.get_str() + ": v(Q" + std::to_string(j) + "(alpha)) = " + v.str() +
                 " >= beta = " + beta.str();
      }
    }
    if (ok) detail += ", " + std::to_string(tested) + " in range";
    out.push_back({"strict_inequality", ok, detail});
  }
  return out;
}

}  // namespace vforge
