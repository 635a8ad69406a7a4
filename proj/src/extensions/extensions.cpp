#include "vforge/extensions.hpp"

#include <optional>
#include <sstream>

#include "vforge/chain_io.hpp"
#include "vforge/factor_q.hpp"
#include "vforge/newton.hpp"

namespace vforge {

ReducibleError::ReducibleError(Poly poly, Poly factor)
    : std::runtime_error(poly.str() + " is reducible over Q: factor " + factor.str()),
      poly_(std::move(poly)),
      factor_(std::move(factor)) {}

namespace {

using Approximation = ValuationExtension::Approximation;

Value base_value(const Chain& base, const Poly& f) {
  if (f.is_zero()) return Value::infinity();
  if (base.empty()) {
    if (!f.is_constant()) throw std::logic_error("empty base evaluated on a non-constant");
    return Value(Rational(padic_valuation(f.coeff(0), base.prime())));
  }
  return base.eval(f);
}

// Polygon of the points (j, base(m_j)) of the key expansion of m.
NewtonPolygon key_polygon(const Chain& base, const std::vector<Poly>& exps) {
  std::vector<std::pair<long, Rational>> pts;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j].is_zero()) continue;
    Value v = base_value(base, exps[j]);
    if (!v.is_rational()) throw std::logic_error("tau value in an extension search");
    pts.emplace_back(static_cast<long>(j), v.standard());
  }
  return lower_hull(std::move(pts));
}

// lambda = v(key(theta)) when only one side of slope above the threshold
// remains and it has length one.
Value terminal_value(const Poly& m, const Chain& base, const Poly& key, const Value& threshold) {
  auto exps = q_expansion(m, key);
  if (exps[0].is_zero()) return Value::infinity();
  NewtonPolygon np = key_polygon(base, exps);
  std::optional<Value> lambda;
  long length = 0;
  for (const auto& s : np.sides) {
    Value l(-s.slope());
    if (!(l > threshold)) continue;
    lambda = l;
    length += s.length();
  }
  if (!lambda || length != 1) throw std::logic_error("extension leaf is not simple");
  return *lambda;
}

struct Leaf {
  Approximation approx;
  int e;
  int f;
};

struct Search {
  Poly m;
  std::vector<Leaf> leaves;
};

int total_ramification(const Chain& c) {
  long e = 1;
  for (std::size_t i = 0; i < c.size(); ++i) e *= c.ramification(i);
  return static_cast<int>(e);
}

void explore(Search& s, const Chain& base, const Poly& key, const std::optional<Value>& threshold);

// Continue below `chain` with a key lifted from psi. A key of the same degree
// as the last one replaces it.
void descend(Search& s, const Chain& chain, const Poly& key) {
  Value thr = chain.eval(key);
  if (key.degree() == chain.d())
    explore(s, chain.prefix(chain.size() - 1), key, thr);
  else
    explore(s, chain, key, thr);
}

void leaf(Search& s, const Chain& chain, const Poly& key, int e, int f) {
  Value thr = chain.eval(key);
  Chain base = key.degree() == chain.d() ? chain.prefix(chain.size() - 1) : chain;
  Value lambda = terminal_value(s.m, base, key, thr);
  s.leaves.push_back({{base, key, lambda}, e, f});
}

void explore(Search& s, const Chain& base, const Poly& key, const std::optional<Value>& threshold) {
  auto exps = q_expansion(s.m, key);
  if (exps[0].is_zero()) throw std::logic_error("key divides the modulus");
  NewtonPolygon np = key_polygon(base, exps);
  for (const auto& side : np.sides) {
    Value lambda(-side.slope());
    if (threshold && !(lambda > *threshold)) continue;
    Chain chain = base.augment(key, lambda);
    ResidualPolynomial red = chain.residual_polynomial(s.m);
    int e = total_ramification(chain);
    int fdeg = chain.residue_field()->degree();
    for (const auto& [psi, mult] : ff::factor(*red.field, red.poly)) {
      Poly next = chain.lift_key(psi);
      if (mult == 1)
        leaf(s, chain, next, e, fdeg * psi.degree());
      else
        descend(s, chain, next);
    }
  }
}

// One step closer: the residual of m over base + (key, value) is linear; its
// lift is a key of the same degree with a larger value.
Approximation refined(const Poly& m, const Approximation& a) {
  Chain chain = a.base.augment(a.key, a.value);
  ResidualPolynomial red = chain.residual_polynomial(m);
  if (red.poly.degree() != 1) throw std::logic_error("refinement residual is not linear");
  Poly key = chain.lift_key(ff::monic(*red.field, red.poly));
  return {a.base, key, terminal_value(m, a.base, key, a.value)};
}

}  // namespace

ValuationExtension::ValuationExtension(Poly m, long p, std::size_t index, int e, int f,
                                       Approximation approx)
    : m_(std::move(m)),
      p_(p),
      index_(index),
      e_(e),
      f_(f),
      state_(std::make_shared<const Approximation>(std::move(approx))) {}

std::shared_ptr<const Approximation> ValuationExtension::snapshot() const {
  std::lock_guard lk(mu_);
  return state_;
}

void ValuationExtension::refine(const std::shared_ptr<const Approximation>& seen) const {
  auto next = std::make_shared<const Approximation>(refined(m_, *seen));
  std::lock_guard lk(mu_);
  if (state_ == seen) state_ = std::move(next);
}

ValuationExtension::Approximation ValuationExtension::approximation() const { return *snapshot(); }

ValuationExtension::Approximation ValuationExtension::approximation_at_least(const Value& target) const {
  for (;;) {
    auto st = snapshot();
    if (st->value >= target) return *st;
    refine(st);
  }
}

Value ValuationExtension::valuation(const Poly& g) const {
  Poly r = g % m_;
  if (r.is_zero()) return Value::infinity();
  for (;;) {
    auto st = snapshot();
    auto exps = q_expansion(r, st->key);
    std::optional<Value> best;
    int hits = 0;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j].is_zero()) continue;
      Value v = base_value(st->base, exps[j]);
      if (j > 0) v = v + st->value.scaled(Rational(static_cast<long>(j)));
      if (!best || v < *best) {
        best = v;
        hits = 1;
      } else if (v == *best) {
        ++hits;
      }
    }
    if (hits == 1) return *best;
    refine(st);
  }
}

std::string ValuationExtension::describe() const {
  auto st = snapshot();
  std::ostringstream os;
  os << print_chain(st->base);
  std::size_t i = st->base.size();
  os << "Q" << i << ": " << st->key.str() << " @ " << st->value.file_str() << "\n";
  return os.str();
}

std::vector<ExtensionPtr> extend_to_number_field(const Poly& m, long p, const ExtendOptions& options) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (m.degree() < 1) throw std::invalid_argument("modulus must have positive degree");
  if (!m.is_monic()) throw std::invalid_argument("modulus must be monic");
  if (m.degree() > options.max_degree)
    throw FieldLimitError("degree " + std::to_string(m.degree()) + " exceeds the configured limit " +
                          std::to_string(options.max_degree));
  for (const auto& c : m.coefficients())
    if (c != 0 && padic_valuation(c, p) < 0)
      throw std::invalid_argument("modulus must have " + std::to_string(p) + "-integral coefficients");
  if (auto fac = find_rational_factor(m)) throw ReducibleError(m, *fac);

  std::vector<ExtensionPtr> out;
  if (m.degree() == 1) {
    out.push_back(std::make_shared<const ValuationExtension>(
        m, p, 0, 1, 1, Approximation{Chain(p, options.max_field_degree), m, Value::infinity()}));
    return out;
  }
  Search s{m, {}};
  explore(s, Chain(p, options.max_field_degree), Poly::x(), std::nullopt);
  int total = 0;
  for (const auto& l : s.leaves) total += l.e * l.f;
  if (total != m.degree()) throw std::logic_error("local degrees do not add up to deg m");
  for (std::size_t i = 0; i < s.leaves.size(); ++i)
    out.push_back(std::make_shared<const ValuationExtension>(m, p, i, s.leaves[i].e, s.leaves[i].f,
                                                             s.leaves[i].approx));
  return out;
}

}  // namespace vforge
