#include "graded.hpp"

#include <stdexcept>

namespace vforge::detail {

namespace {

Rational p_power(long p, long k) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(Integer(1), q) : Rational(q);
}

long denominator_long(const Rational& r) { return r.get_den().get_si(); }

}  // namespace

Value Graded::value(int i, const Poly& g) const {
  if (g.is_zero()) return Value::infinity();
  if (i < 0) {
    if (g.degree() > 0) throw std::logic_error("non-constant polynomial at the base level");
    return Value(padic_valuation(g.coeff(0), p_));
  }
  const Level& l = lv(i);
  if (g.degree() < l.degree) return value(i - 1, g);
  auto exps = q_expansion(g, l.key);
  Value best = Value::infinity();
  for (size_t j = 0; j < exps.size(); ++j) {
    if (exps[j].is_zero()) continue;
    best = min(best, value(i - 1, exps[j]) + l.beta.scaled(static_cast<long>(j)));
  }
  return best;
}

std::vector<long> Graded::normalizer(int i, const Value& gamma) const {
  if (i < 0) {
    if (!gamma.is_rational() || !is_integer(gamma.standard()))
      throw std::logic_error("normalizer: value outside the base group");
    return {gamma.standard().get_num().get_si()};
  }
  const Level& l = lv(i);
  long n = -1;
  if (l.e == 0) {
    Rational r = gamma.tau() / l.beta.tau();
    if (!is_integer(r)) throw std::logic_error("normalizer: tau part outside the group");
    n = r.get_num().get_si();
  } else {
    if (gamma.tau() != 0) throw std::logic_error("normalizer: unexpected tau part");
    const Rational g = group_gen(i - 1);
    for (long k = 0; k < l.e; ++k) {
      if (is_integer((gamma.standard() - l.beta.standard() * k) / g)) {
        n = k;
        break;
      }
    }
    if (n < 0) throw std::logic_error("normalizer: value outside Gamma_i");
  }
  auto out = normalizer(i - 1, gamma - l.beta.scaled(n));
  out.push_back(n);
  return out;
}

FElem Graded::embed(int from, int to, FElem x) const {
  for (int l = from; l < to; ++l) x = lv(l + 1).field->map_from(*lv(l).field, x, lv(l + 1).link.gen_image);
  return x;
}

FElem Graded::unit_residue(int l, std::vector<long> exps) const {
  if (l < 0) {
    if (exps.at(0) != 0) throw std::logic_error("unit residue of a non-unit");
    return lv(0).field->one();
  }
  const Level& lvl = lv(l);
  if (lvl.e == 0) throw std::logic_error("unit residue through a tau level");
  const long n = exps.at(l + 1);
  if (n % lvl.e != 0) throw std::logic_error("unit residue: exponent not divisible by e");
  const long t = n / lvl.e;
  exps.pop_back();
  for (size_t k = 0; k < exps.size(); ++k) exps[k] += t * lvl.norm_step[k];
  FElem inner = embed(l, l + 1, unit_residue(l - 1, std::move(exps)));
  const FiniteField& F = *lv(l + 1).field;
  return F.mul(inner, F.pow(lv(l + 1).link.root, t));
}

FElem Graded::term_unit(int i, const Rational& g, long t) const {
  if (i == 0) return lv(0).field->one();
  const Level& l = lv(i);
  auto a = normalizer(i - 1, Value(g));
  auto b = normalizer(i - 1, Value(g + l.beta.standard() * (t * l.e)));
  std::vector<long> exps(a.size());
  for (size_t k = 0; k < a.size(); ++k) exps[k] = t * l.norm_step[k] + a[k] - b[k];
  return unit_residue(i - 1, std::move(exps));
}

Reduction Graded::reduce(int i, const Poly& g) const {
  const Level& l = lv(i);
  const FiniteField& F = *l.field;
  auto exps = q_expansion(g, l.key);
  std::vector<Value> inner(exps.size());
  Value best = Value::infinity();
  for (size_t j = 0; j < exps.size(); ++j) {
    if (exps[j].is_zero()) continue;
    inner[j] = value(i - 1, exps[j]);
    best = min(best, inner[j] + l.beta.scaled(static_cast<long>(j)));
  }
  std::vector<long> S;
  for (size_t j = 0; j < exps.size(); ++j)
    if (!exps[j].is_zero() && inner[j] + l.beta.scaled(static_cast<long>(j)) == best)
      S.push_back(static_cast<long>(j));
  Reduction r;
  r.value = best;
  if (l.e == 0) {
    if (S.size() != 1) throw std::logic_error("tau level with several minimal terms");
    r.poly = ff::constant(F, coefficient(i, exps[S[0]]));
    return r;
  }
  const long n = S.front() % l.e;
  r.t_min = (S.front() - n) / l.e;
  const long t_max = (S.back() - n) / l.e;
  r.poly.c.assign(t_max - r.t_min + 1, F.zero());
  for (long j : S) {
    const long t = (j - n) / l.e;
    FElem c = F.mul(coefficient(i, exps[j]), term_unit(i, inner[j].standard(), t));
    r.poly.c[t - r.t_min] = c;
  }
  r.poly = ff::trim(F, r.poly);
  return r;
}

FElem Graded::coefficient(int i, const Poly& h) const {
  if (i == 0) {
    const Rational& c = h.coeff(0);
    long v = padic_valuation(c, p_);
    Rational u = c / p_power(p_, v);
    return lv(0).field->from_int(residue_mod(u, p_));
  }
  Reduction r = reduce(i - 1, h);
  const FiniteField& F = *lv(i).field;
  const FElem& z = lv(i).link.root;
  FElem acc = F.zero();
  FElem zp = F.pow(z, r.t_min);
  for (const auto& c : r.poly.c) {
    acc = F.add(acc, F.mul(embed(i - 1, i, c), zp));
    zp = F.mul(zp, z);
  }
  return acc;
}

Poly Graded::lift(int i, const Rational& g, const FElem& c) const {
  if (i == 0) {
    if (!is_integer(g)) throw std::logic_error("lift: value outside Z at the base level");
    long ch = c.at(0);
    if (2 * ch > p_) ch -= p_;
    return Poly(p_power(p_, g.get_num().get_si()) * ch);
  }
  const int l = i - 1;
  const Level& prev = lv(l);
  const Level& cur = lv(i);
  const long n = normalizer(l, Value(g)).back();
  const int f = cur.f_prev;
  auto d = tower_coordinates(cur.link, *prev.field, f, c);
  Poly A;
  for (int s = 0; s < f; ++s) {
    if (prev.field->is_zero(d[s])) continue;
    const long j = n + s * prev.e;
    const Rational gj = g - prev.beta.standard() * j;
    FElem target = prev.field->div(d[s], term_unit(l, gj, s));
    A += lift(l, gj, target) * pow(prev.key, static_cast<unsigned>(j));
  }
  return A;
}

Poly Graded::lift_key(const FFPoly& psi0) const {
  const int L = static_cast<int>(L_.size()) - 1;
  const Level& l = lv(L);
  if (l.e == 0) throw std::domain_error("cannot lift a key over a tau-valued level");
  const FiniteField& F = *l.field;
  FFPoly psi = ff::monic(F, psi0);
  const int f = psi.degree();
  if (f < 1 || F.is_zero(psi.c[0])) throw std::domain_error("lift_key needs a residual polynomial other than y");
  const Rational beta = l.beta.standard();
  const FElem c_top = term_unit(L, Rational(0), f);
  Poly phi = pow(l.key, static_cast<unsigned>(l.e * f));
  for (int k = 0; k < f; ++k) {
    if (F.is_zero(psi.c[k])) continue;
    const Rational gk = beta * ((f - k) * l.e);
    FElem target = F.div(F.mul(psi.c[k], c_top), term_unit(L, gk, k));
    phi += lift(L, gk, target) * pow(l.key, static_cast<unsigned>(l.e * k));
  }
  return phi;
}

Chain Graded::build(const Poly& q, const Value& beta, int max_field_degree, const FFPoly& psi) const {
  auto lvl = std::make_shared<Level>();
  lvl->key = q;
  lvl->beta = beta;
  lvl->degree = q.degree();
  const int i = static_cast<int>(L_.size());
  if (i == 0) {
    lvl->field = FiniteField::prime_field(p_);
    if (beta.tau() == 0) {
      lvl->e = denominator_long(beta.standard());
      lvl->gen = rational_gcd(Rational(1), beta.standard());
      Rational eb = beta.standard() * lvl->e;
      lvl->norm_step = {eb.get_num().get_si()};
    } else {
      lvl->e = 0;
      lvl->gen = 1;
    }
  } else {
    const Level& prev = lv(i - 1);
    try {
      lvl->link = extend_field(prev.field, psi, max_field_degree);
    } catch (const FieldLimitError& err) {
      throw ChainError("augment.residue_field_limit", err.what());
    }
    lvl->field = lvl->link.field;
    lvl->psi_prev = psi;
    lvl->f_prev = psi.degree();
    if (beta.tau() == 0) {
      lvl->e = denominator_long(beta.standard() / prev.gen);
      lvl->gen = rational_gcd(prev.gen, beta.standard());
      lvl->norm_step = normalizer(i - 1, beta.scaled(lvl->e));
    } else {
      lvl->e = 0;
      lvl->gen = prev.gen;
    }
  }
  Levels levels = L_;
  levels.push_back(lvl);
  Chain chain(p_, max_field_degree, std::move(levels));
  lvl->eps = chain.epsilon(q);
  return chain;
}

}  // namespace vforge::detail
