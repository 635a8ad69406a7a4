#include "vforge/factor_q.hpp"

#include <stdexcept>

#include "vforge/finite_field.hpp"

namespace vforge {

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zmod(std::move(r), m);
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  ztrim(a);
  return a;
}

ZPoly zscale(ZPoly a, const Integer& c) {
  for (auto& x : a) x *= c;
  ztrim(a);
  return a;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivmod(ZPoly a, const ZPoly& b, const Integer& m) {
  a = zmod(std::move(a), m);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {ZPoly{}, a};
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (int k = static_cast<int>(a.size()) - 1 - db; k >= 0; --k) {
    Integer t = a[k + db] % m;
    if (t < 0) t += m;
    q[k] = t;
    if (t == 0) continue;
    for (int i = 0; i <= db; ++i) a[k + i] -= t * b[i];
    for (int i = 0; i <= db; ++i) {
      a[k + i] %= m;
      if (a[k + i] < 0) a[k + i] += m;
    }
  }
  ztrim(q);
  ztrim(a);
  return {q, a};
}

FFPoly to_ff(const FiniteField& F, const ZPoly& a) {
  FFPoly r;
  const long q = F.characteristic();
  for (const auto& c : a) {
    Integer x = c % q;
    if (x < 0) x += q;
    r.c.push_back(F.from_int(x.get_si()));
  }
  return ff::trim(F, r);
}

ZPoly from_ff(const FFPoly& a) {
  ZPoly r;
  for (const auto& c : a.c) r.emplace_back(c[0]);
  return r;
}

// s, t with s a + t b = 1 mod q (a, b coprime mod q).
std::pair<ZPoly, ZPoly> bezout(const FiniteField& F, const ZPoly& a, const ZPoly& b) {
  FFPoly r0 = to_ff(F, a), r1 = to_ff(F, b);
  FFPoly s0 = ff::constant(F, F.one()), s1{};
  FFPoly t0{}, t1 = ff::constant(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = ff::divmod(F, r0, r1);
    FFPoly s = ff::sub(F, s0, ff::mul(F, q, s1));
    FFPoly t = ff::sub(F, t0, ff::mul(F, q, t1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
    t0 = t1;
    t1 = t;
  }
  if (r0.degree() != 0) throw std::logic_error("Hensel factors are not coprime");
  FElem inv = F.inv(r0.c[0]);
  return {from_ff(ff::scale(F, s0, inv)), from_ff(ff::scale(F, t0, inv))};
}

// Lift g = a b (mod q), a and b monic, to g = A B (mod q^K).
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& g, ZPoly a, ZPoly b, long q, int K) {
  auto F = FiniteField::prime_field(q);
  auto [s, t] = bezout(*F, a, b);
  const Integer qq = q;
  const ZPoly a0 = a, b0 = b;
  Integer qk = q;
  for (int k = 1; k < K; ++k) {
    ZPoly prod;
    {
      ZPoly r(a.size() + b.size() - 1, Integer(0));
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
      ztrim(r);
      prod = std::move(r);
    }
    ZPoly e = zsub(g, prod);
    for (auto& c : e) {
      if (c % qk != 0) throw std::logic_error("Hensel invariant broken");
      c /= qk;
    }
    e = zmod(std::move(e), qq);
    if (!e.empty()) {
      ZPoly da = zdivmod(zmul(t, e, qq), a0, qq).second;
      ZPoly rest = zsub(e, zmul(da, b0, qq));
      rest = zmod(std::move(rest), qq);
      auto [db, rem] = zdivmod(rest, a0, qq);
      if (!rem.empty()) throw std::logic_error("Hensel division not exact");
      a = zadd(a, zscale(da, qk));
      b = zadd(b, zscale(db, qk));
    }
    qk *= q;
  }
  return {zmod(a, qk), zmod(b, qk)};
}

void hensel_tree(const ZPoly& g, const std::vector<ZPoly>& fs, long q, int K, std::vector<ZPoly>& out) {
  if (fs.size() == 1) {
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(K));
    out.push_back(zmod(g, m));
    return;
  }
  const Integer qq = q;
  size_t half = fs.size() / 2;
  ZPoly a{Integer(1)}, b{Integer(1)};
  for (size_t i = 0; i < fs.size(); ++i) (i < half ? a : b) = zmul(i < half ? a : b, fs[i], qq);
  auto [A, B] = hensel_pair(g, a, b, q, K);
  hensel_tree(A, std::vector<ZPoly>(fs.begin(), fs.begin() + half), q, K, out);
  hensel_tree(B, std::vector<ZPoly>(fs.begin() + half, fs.end()), q, K, out);
}

Poly to_poly(const ZPoly& a) {
  std::vector<Rational> c;
  for (const auto& x : a) c.emplace_back(x);
  return Poly(std::move(c));
}

}  // namespace

std::optional<Poly> find_rational_factor(const Poly& f0) {
  if (f0.degree() < 1) throw std::domain_error("factoring a constant polynomial");
  const int n = f0.degree();
  if (n == 1) return std::nullopt;
  Poly f = f0.monic();
  // g(X) = D^n f(X / D) is monic with integer coefficients.
  Integer D = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> gc(n + 1);
  {
    Rational pw = 1;
    for (int k = n; k >= 0; --k) {
      gc[k] = f.coeff(k) * pw;
      pw *= D;
    }
  }
  Poly g(gc);
  // Back to f: h(X) | g gives D^(-deg h) h(D X) | f.
  auto back = [&](const Poly& h) {
    Poly r = h.compose(Poly(std::vector<Rational>{0, Rational(D)}));
    return r.monic();
  };
  Poly sq = gcd(g, g.derivative());
  if (sq.degree() > 0) return back(sq);
  if (g.coeff(0) == 0) return back(Poly::x());

  ZPoly gz;
  for (const auto& c : g.coefficients()) gz.push_back(c.get_num());

  long best_q = 0;
  std::vector<ZPoly> best;
  int good = 0;
  for (long q = 3; q < 1000 && good < 5; q += 2) {
    if (!is_prime(q)) continue;
    auto F = FiniteField::prime_field(q);
    FFPoly gq = to_ff(*F, gz);
    FFPoly d = ff::gcd(*F, gq, ff::derivative(*F, gq));
    if (d.degree() > 0) continue;
    ++good;
    auto fs = ff::factor(*F, gq);
    if (best_q == 0 || fs.size() < best.size()) {
      best_q = q;
      best.clear();
      for (auto& [h, m] : fs) best.push_back(from_ff(h));
    }
    if (fs.size() == 1) return std::nullopt;
  }
  if (best_q == 0) throw std::logic_error("no good reduction prime found");

  // Mignotte: factor coefficients are bounded by 2^n ||g||_2.
  Integer norm2 = 0;
  for (const auto& c : gz) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  bound <<= n;
  bound = 2 * bound + 1;
  int K = 1;
  Integer qK = best_q;
  while (qK <= bound) {
    qK *= best_q;
    ++K;
  }
  std::vector<ZPoly> lifted;
  hensel_tree(gz, best, best_q, K, lifted);
  const size_t r = lifted.size();
  const Integer half = qK / 2;
  for (size_t size = 1; 2 * size <= r; ++size) {
    for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
      if (static_cast<size_t>(__builtin_popcountl(mask)) != size) continue;
      ZPoly h{Integer(1)};
      for (size_t i = 0; i < r; ++i)
        if (mask & (1ul << i)) h = zmul(h, lifted[i], qK);
      for (auto& c : h)
        if (c > half) c -= qK;
      Poly hp = to_poly(h);
      if ((g % hp).is_zero()) return back(hp);
    }
  }
  return std::nullopt;
}

}  // namespace vforge
