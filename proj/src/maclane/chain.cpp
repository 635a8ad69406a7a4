#include "vforge/chain.hpp"

#include <algorithm>
#include <sstream>

#include "graded.hpp"

namespace vforge {

ChainError::ChainError(std::string invariant, std::string witness)
    : std::runtime_error(invariant + ": " + witness),
      invariant_(std::move(invariant)),
      witness_(std::move(witness)) {}

std::string to_string(Classification c) {
  return c == Classification::ResidueTranscendental ? "residue-transcendental"
                                                    : "value-transcendental";
}

namespace {

std::string join_values(const std::vector<Value>& vs) {
  std::string s = "{";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += vs[i].str();
  }
  return s + "}";
}

}  // namespace

Chain::Chain(long p, int max_field_degree)
    : p_(p), max_field_degree_(max_field_degree), prime_field_(FiniteField::prime_field(p)) {}

Chain::Chain(long p, int maxdeg, std::vector<std::shared_ptr<const detail::Level>> levels)
    : p_(p), max_field_degree_(maxdeg), levels_(std::move(levels)) {
  prime_field_ = levels_.empty() ? FiniteField::prime_field(p) : levels_[0]->field;
}

const Poly& Chain::key(std::size_t i) const { return levels_.at(i)->key; }
const Value& Chain::beta(std::size_t i) const { return levels_.at(i)->beta; }
const Value& Chain::epsilon_at(std::size_t i) const { return levels_.at(i)->eps; }
long Chain::ramification(std::size_t i) const { return levels_.at(i)->e; }
int Chain::degree(std::size_t i) const { return levels_.at(i)->degree; }

int Chain::d() const {
  if (levels_.empty()) throw std::domain_error("d(w) of an empty chain");
  return levels_.back()->degree;
}

const FieldPtr& Chain::residue_field() const {
  return levels_.empty() ? prime_field_ : levels_.back()->field;
}

Chain Chain::prefix(std::size_t n) const {
  if (n > levels_.size()) throw std::out_of_range("chain prefix longer than chain");
  return Chain(p_, max_field_degree_, {levels_.begin(), levels_.begin() + n});
}

bool operator==(const Chain& a, const Chain& b) {
  if (a.p_ != b.p_ || a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a.key(i) != b.key(i) || a.beta(i) != b.beta(i)) return false;
  return true;
}

Value Chain::eval(const Poly& f) const {
  return detail::Graded(p_, levels_).value(static_cast<int>(levels_.size()) - 1, f);
}

Value Chain::eval_level(std::size_t i, const Poly& f) const {
  if (i >= levels_.size()) throw std::out_of_range("level index");
  return detail::Graded(p_, levels_).value(static_cast<int>(i), f);
}

Value Chain::truncate(std::size_t i, const Poly& f) const {
  if (i >= levels_.size()) throw std::out_of_range("level index");
  if (f.is_zero()) return Value::infinity();
  auto exps = q_expansion(f, levels_[i]->key);
  Value best = Value::infinity();
  for (size_t j = 0; j < exps.size(); ++j) {
    if (exps[j].is_zero()) continue;
    best = min(best, eval(exps[j]) + levels_[i]->beta.scaled(static_cast<long>(j)));
  }
  return best;
}

Value Chain::epsilon(const Poly& f) const {
  if (f.degree() < 1) throw std::domain_error("epsilon of a constant polynomial");
  const Value wf = eval(f);
  Value best;
  bool have = false;
  for (int b = 1; b <= f.degree(); ++b) {
    Poly h = hasse_derivative(f, b);
    Value v = (wf - eval(h)).scaled(Rational(1, b));
    if (!have || best < v) best = v;
    have = true;
  }
  return best;
}

ResidualPolynomial Chain::residual_polynomial(const Poly& f) const {
  if (levels_.empty()) throw std::domain_error("residual polynomial over an empty chain");
  if (f.is_zero()) throw std::domain_error("residual polynomial of zero");
  detail::Graded g(p_, levels_);
  const int L = static_cast<int>(levels_.size()) - 1;
  auto red = g.reduce(L, f);
  return ResidualPolynomial{levels_.back()->field, red.poly, red.value, levels_.back()->e};
}

Classification Chain::classify() const {
  if (levels_.empty()) throw std::domain_error("classification of an empty chain");
  return levels_.back()->beta.tau() != 0 ? Classification::ValueTranscendental
                                         : Classification::ResidueTranscendental;
}

ChainData Chain::data() const {
  if (levels_.empty()) throw std::domain_error("data of an empty chain");
  ChainData cd;
  cd.d = d();
  for (const auto& l : levels_) {
    LevelData ld;
    ld.degree = l->degree;
    ld.beta = l->beta;
    ld.epsilon = l->eps;
    ld.e = l->e;
    ld.f = l->f_prev;
    ld.group_generator = l->gen;
    cd.levels.push_back(ld);
  }
  cd.group_generator = levels_.back()->gen;
  cd.has_tau = levels_.back()->beta.tau() != 0;
  cd.residue_field_degree = levels_.back()->field->degree();
  return cd;
}

Poly Chain::lift_key(const FFPoly& psi) const {
  if (levels_.empty()) throw std::domain_error("lifting over an empty chain");
  detail::Graded g(p_, levels_);
  return g.lift_key(psi);
}

KeyCertificate Chain::is_key(const Poly& q, const std::optional<Value>& beta) const {
  KeyCertificate cert;
  if (!q.is_monic()) throw ChainError("is_key.degree", "key polynomial must be monic");
  if (levels_.empty()) {
    if (q.degree() != 1)
      throw ChainError("is_key.degree", "first key polynomial must be linear, got degree " +
                                            std::to_string(q.degree()));
    cert.is_key = true;
    cert.epsilon = beta.value_or(Value(0));
    return cert;
  }
  const int dl = d();
  if (q.degree() <= dl || q.degree() % dl != 0)
    throw ChainError("is_key.degree", "degree " + std::to_string(q.degree()) +
                                          " is not a proper multiple of d = " + std::to_string(dl));
  if (levels_.back()->e == 0)
    throw ChainError("is_key.after_tau", "last level value " + levels_.back()->beta.str() +
                                             " has a tau part");
  detail::Graded g(p_, levels_);
  const int L = static_cast<int>(levels_.size()) - 1;
  auto exps = q_expansion(q, levels_.back()->key);
  for (size_t j = 0; j < exps.size(); ++j) {
    if (exps[j].is_zero()) continue;
    cert.term_values.push_back(g.value(L - 1, exps[j]) + levels_.back()->beta.scaled(static_cast<long>(j)));
  }
  bool homogeneous = std::all_of(cert.term_values.begin(), cert.term_values.end(),
                                 [&](const Value& v) { return v == cert.term_values.front(); });
  cert.epsilon_last = levels_.back()->eps;
  if (!homogeneous) {
    cert.failure = "inhomogeneous";
    cert.witness = "inhomogeneous expansion values " + join_values(cert.term_values);
    return cert;
  }
  auto red = g.reduce(L, q);
  ResidualPolynomial rp{levels_.back()->field, red.poly, red.value, levels_.back()->e};
  cert.residual = rp;
  const long e = levels_.back()->e;
  const long want = (q.degree() / dl) / e;
  if (red.poly.degree() != want) {
    cert.failure = "residual_degree";
    cert.witness = "residual " + rp.str() + " has degree " + std::to_string(red.poly.degree()) +
                   ", expected " + std::to_string(want);
    return cert;
  }
  const FiniteField& F = *levels_.back()->field;
  if (F.is_zero(red.poly.c[0]) || !ff::is_irreducible(F, red.poly)) {
    cert.failure = "residual_reducible";
    cert.witness = "residual " + rp.str() + " is reducible";
    return cert;
  }
  Value b = beta.value_or(red.value + Value(1));
  if (b <= red.value) {
    // the epsilon-growth test needs an admissible value; report against eval + 1
    b = red.value + Value(1);
  }
  Chain next = g.build(q, b, max_field_degree_, ff::monic(F, red.poly));
  cert.epsilon = next.epsilon_at(next.size() - 1);
  if (!(*cert.epsilon > levels_.back()->eps)) {
    cert.failure = "epsilon_growth";
    cert.witness = "epsilon " + cert.epsilon->str() + " does not exceed " + levels_.back()->eps.str();
    return cert;
  }
  cert.is_key = true;
  return cert;
}

Chain Chain::augment(const Poly& q, const Value& beta) const {
  if (beta.is_infinite()) throw ChainError("augment.value", "key value must be finite");
  if (!levels_.empty() && levels_.back()->e == 0)
    throw ChainError("augment.after_tau",
                     "cannot augment past the tau-valued level " + levels_.back()->beta.str());
  if (!q.is_monic()) throw ChainError("augment.degree", "key polynomial " + q.str() + " is not monic");
  if (levels_.empty()) {
    if (q.degree() != 1)
      throw ChainError("chain.first_key_linear",
                       "first key polynomial must be monic linear, got " + q.str());
    detail::Graded g(p_, levels_);
    return g.build(q, beta, max_field_degree_, FFPoly{});
  }
  const int dl = d();
  if (q.degree() <= dl || q.degree() % dl != 0)
    throw ChainError("augment.degree", "degree " + std::to_string(q.degree()) +
                                           " is not a proper multiple of d = " + std::to_string(dl));
  KeyCertificate cert = is_key(q, beta);
  if (!cert.is_key && cert.failure != "epsilon_growth")
    throw ChainError("augment.key_test", cert.witness);
  const Value current = eval(q);
  if (!(beta > current))
    throw ChainError("augment.beta_not_above",
                     "value " + beta.str() + " is not above the current value " + current.str());
  if (!(beta > levels_.back()->beta))
    throw ChainError("augment.beta_monotone", "value " + beta.str() + " does not exceed " +
                                                  levels_.back()->beta.str());
  if (!cert.is_key) throw ChainError("augment.epsilon_monotone", cert.witness);
  detail::Graded g(p_, levels_);
  return g.build(q, beta, max_field_degree_, ff::monic(*levels_.back()->field, cert.residual->poly));
}

}  // namespace vforge
