#include "vforge/finite_field.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace vforge {

namespace {

long mulmod(long a, long b, long p) {
  return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

using Matrix = std::vector<std::vector<long>>;

// Inverse of a square matrix mod p, or nullopt if singular.
std::optional<Matrix> invert(Matrix a, long p) {
  const size_t n = a.size();
  Matrix inv(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    long s = inverse_mod(a[col][col], p);
    for (size_t j = 0; j < n; ++j) {
      a[col][j] = mulmod(a[col][j], s, p);
      inv[col][j] = mulmod(inv[col][j], s, p);
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      long f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] = ((a[r][j] - mulmod(f, a[col][j], p)) % p + p) % p;
        inv[r][j] = ((inv[r][j] - mulmod(f, inv[col][j], p)) % p + p) % p;
      }
    }
  }
  return inv;
}

std::vector<long> apply(const Matrix& m, const std::vector<long>& v, long p) {
  std::vector<long> r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    __int128 acc = 0;
    for (size_t j = 0; j < v.size(); ++j) acc += static_cast<__int128>(m[i][j]) * v[j];
    r[i] = static_cast<long>(acc % p);
  }
  return r;
}

}  // namespace

FiniteField::FiniteField(long p, std::vector<long> modulus) : p_(p), mod_(std::move(modulus)) {
  k_ = static_cast<int>(mod_.size()) - 1;
}

FieldPtr FiniteField::prime_field(long p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  return std::shared_ptr<const FiniteField>(new FiniteField(p, {0, 1}));
}

FieldPtr FiniteField::from_modulus(long p, std::vector<long> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  for (auto& c : modulus) c = ((c % p) + p) % p;
  return std::shared_ptr<const FiniteField>(new FiniteField(p, std::move(modulus)));
}

Integer FiniteField::order() const {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(k_));
  return q;
}

FElem FiniteField::from_int(long c) const {
  FElem r(k_, 0);
  r[0] = ((c % p_) + p_) % p_;
  return r;
}

FElem FiniteField::generator() const {
  if (k_ == 1) return from_int(-mod_[0]);
  FElem r(k_, 0);
  r[1] = 1;
  return r;
}

bool FiniteField::is_zero(const FElem& a) const {
  return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

bool FiniteField::is_one(const FElem& a) const {
  if (a[0] != 1) return false;
  for (int i = 1; i < k_; ++i)
    if (a[i] != 0) return false;
  return true;
}

FElem FiniteField::add(const FElem& a, const FElem& b) const {
  FElem r(k_);
  for (int i = 0; i < k_; ++i) {
    r[i] = a[i] + b[i];
    if (r[i] >= p_) r[i] -= p_;
  }
  return r;
}

FElem FiniteField::sub(const FElem& a, const FElem& b) const {
  FElem r(k_);
  for (int i = 0; i < k_; ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) r[i] += p_;
  }
  return r;
}

FElem FiniteField::neg(const FElem& a) const { return sub(zero(), a); }

FElem FiniteField::mul(const FElem& a, const FElem& b) const {
  if (k_ == 1) return {mulmod(a[0], b[0], p_)};
  std::vector<__int128> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k_; ++j) prod[i + j] += static_cast<__int128>(a[i]) * b[j];
  }
  std::vector<long> r(prod.size());
  for (size_t i = 0; i < prod.size(); ++i) r[i] = static_cast<long>(prod[i] % p_);
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    long c = r[d];
    if (c == 0) continue;
    r[d] = 0;
    for (int i = 0; i < k_; ++i)
      r[d - k_ + i] = ((r[d - k_ + i] - mulmod(c, mod_[i], p_)) % p_ + p_) % p_;
  }
  r.resize(k_);
  return r;
}

FElem FiniteField::pow(const FElem& a, const Integer& e) const {
  if (e < 0) return pow(inv(a), Integer(-e));
  FElem r = one();
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

FElem FiniteField::pow(const FElem& a, long e) const { return pow(a, Integer(e)); }

FElem FiniteField::inv(const FElem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in a finite field");
  if (k_ == 1) return {inverse_mod(a[0], p_)};
  return pow(a, Integer(order() - 2));
}

FElem FiniteField::random(std::mt19937_64& rng) const {
  FElem r(k_);
  for (auto& x : r) x = static_cast<long>(rng() % static_cast<unsigned long>(p_));
  return r;
}

FElem FiniteField::map_from(const FiniteField& sub, const FElem& x, const FElem& gen_image) const {
  FElem acc = zero();
  for (int i = sub.degree(); i-- > 0;) acc = add(mul(acc, gen_image), from_int(x[i]));
  return acc;
}

std::string FiniteField::str(const FElem& a) const {
  if (k_ == 1) return std::to_string(a[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = k_; i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i > 0) {
      if (a[i] != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  std::string s = os.str();
  return "(" + s + ")";
}

namespace ff {

FFPoly trim(const FiniteField& F, FFPoly a) {
  while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
  return a;
}

FFPoly constant(const FiniteField& F, const FElem& c) { return trim(F, FFPoly{{c}}); }

FFPoly x(const FiniteField& F) { return FFPoly{{F.zero(), F.one()}}; }

FFPoly add(const FiniteField& F, const FFPoly& a, const FFPoly& b) {
  FFPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
  for (size_t i = 0; i < r.c.size(); ++i) {
    if (i < a.c.size()) r.c[i] = F.add(r.c[i], a.c[i]);
    if (i < b.c.size()) r.c[i] = F.add(r.c[i], b.c[i]);
  }
  return trim(F, std::move(r));
}

FFPoly sub(const FiniteField& F, const FFPoly& a, const FFPoly& b) {
  FFPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
  for (size_t i = 0; i < r.c.size(); ++i) {
    if (i < a.c.size()) r.c[i] = F.add(r.c[i], a.c[i]);
    if (i < b.c.size()) r.c[i] = F.sub(r.c[i], b.c[i]);
  }
  return trim(F, std::move(r));
}

FFPoly mul(const FiniteField& F, const FFPoly& a, const FFPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  FFPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return trim(F, std::move(r));
}

FFPoly scale(const FiniteField& F, const FFPoly& a, const FElem& c) {
  FFPoly r = a;
  for (auto& x : r.c) x = F.mul(x, c);
  return trim(F, std::move(r));
}

std::pair<FFPoly, FFPoly> divmod(const FiniteField& F, const FFPoly& a, const FFPoly& b) {
  if (b.is_zero()) throw std::domain_error("finite-field polynomial division by zero");
  FFPoly r = a;
  const int db = b.degree();
  if (a.degree() < db) return {FFPoly{}, r};
  FFPoly q;
  q.c.assign(a.degree() - db + 1, F.zero());
  FElem inv = F.inv(b.c.back());
  for (int k = a.degree() - db; k >= 0; --k) {
    FElem t = F.mul(r.c[k + db], inv);
    if (F.is_zero(t)) continue;
    q.c[k] = t;
    for (int i = 0; i <= db; ++i) r.c[k + i] = F.sub(r.c[k + i], F.mul(t, b.c[i]));
  }
  return {trim(F, std::move(q)), trim(F, std::move(r))};
}

FFPoly mod(const FiniteField& F, const FFPoly& a, const FFPoly& b) { return divmod(F, a, b).second; }

FFPoly monic(const FiniteField& F, const FFPoly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.c.back()));
}

FFPoly gcd(const FiniteField& F, FFPoly a, FFPoly b) {
  while (!b.is_zero()) {
    FFPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

FFPoly derivative(const FiniteField& F, const FFPoly& a) {
  if (a.c.size() <= 1) return {};
  FFPoly r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = F.mul(a.c[i], F.from_int(static_cast<long>(i % F.characteristic())));
  return trim(F, std::move(r));
}

FFPoly powmod(const FiniteField& F, const FFPoly& base, const Integer& e, const FFPoly& m) {
  FFPoly r = constant(F, F.one());
  r = mod(F, r, m);
  FFPoly b = mod(F, base, m);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = mod(F, mul(F, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(F, mul(F, r, b), m);
  }
  return r;
}

FElem eval(const FiniteField& F, const FFPoly& a, const FElem& x) {
  FElem acc = F.zero();
  for (size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

bool is_one(const FiniteField& F, const FFPoly& a) { return a.c.size() == 1 && F.is_one(a.c[0]); }

namespace {

// g^(1/p) for g whose exponents are all multiples of p.
FFPoly pth_root(const FiniteField& F, const FFPoly& g) {
  const long p = F.characteristic();
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(F.degree() - 1));
  FFPoly r;
  r.c.assign(g.degree() / p + 1, F.zero());
  for (int i = 0; i <= g.degree(); i += static_cast<int>(p)) r.c[i / p] = F.pow(g.c[i], e);
  return trim(F, std::move(r));
}

void squarefree(const FiniteField& F, const FFPoly& f, int mult, std::vector<std::pair<FFPoly, int>>& out) {
  FFPoly c = gcd(F, f, derivative(F, f));
  FFPoly w = divmod(F, f, c).first;
  int i = 1;
  while (!is_one(F, w)) {
    FFPoly y = gcd(F, w, c);
    FFPoly fac = divmod(F, w, y).first;
    if (!is_one(F, fac)) out.emplace_back(monic(F, fac), i * mult);
    w = y;
    c = divmod(F, c, y).first;
    ++i;
  }
  if (!is_one(F, c)) squarefree(F, pth_root(F, c), mult * static_cast<int>(F.characteristic()), out);
}

std::vector<std::pair<FFPoly, int>> distinct_degree(const FiniteField& F, FFPoly f) {
  std::vector<std::pair<FFPoly, int>> out;
  const Integer q = F.order();
  FFPoly h = mod(F, x(F), f);
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = powmod(F, h, q, f);
    FFPoly g = gcd(F, f, sub(F, h, x(F)));
    if (!is_one(F, g)) {
      out.emplace_back(g, i);
      f = divmod(F, f, g).first;
      h = mod(F, h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

void equal_degree(const FiniteField& F, const FFPoly& g, int d, std::mt19937_64& rng,
                  std::vector<FFPoly>& out) {
  if (g.degree() == d) {
    out.push_back(monic(F, g));
    return;
  }
  const Integer q = F.order();
  Integer qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  for (;;) {
    FFPoly a;
    for (int i = 0; i < g.degree(); ++i) a.c.push_back(F.random(rng));
    a = trim(F, std::move(a));
    if (a.degree() < 1) continue;
    FFPoly b;
    if (F.characteristic() == 2) {
      // trace from F_{2^(kd)} to F_2
      FFPoly t = mod(F, a, g);
      FFPoly acc = t;
      for (long i = 1; i < static_cast<long>(F.degree()) * d; ++i) {
        t = mod(F, mul(F, t, t), g);
        acc = add(F, acc, t);
      }
      b = acc;
    } else {
      b = sub(F, powmod(F, a, Integer((qd - 1) / 2), g), constant(F, F.one()));
    }
    FFPoly h = gcd(F, g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, divmod(F, g, h).first, d, rng, out);
      return;
    }
  }
}

bool poly_less(const FFPoly& a, const FFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (size_t i = a.c.size(); i-- > 0;)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

}  // namespace

std::vector<std::pair<FFPoly, int>> factor(const FiniteField& F, const FFPoly& f0) {
  if (f0.is_zero()) throw std::domain_error("factoring the zero polynomial");
  FFPoly f = monic(F, f0);
  std::vector<std::pair<FFPoly, int>> out;
  if (f.degree() < 1) return out;
  std::vector<std::pair<FFPoly, int>> sqf;
  squarefree(F, f, 1, sqf);
  std::mt19937_64 rng(0x5f3759df);
  for (auto& [g, m] : sqf) {
    for (auto& [h, d] : distinct_degree(F, g)) {
      std::vector<FFPoly> parts;
      equal_degree(F, h, d, rng, parts);
      for (auto& part : parts) out.emplace_back(part, m);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  // merge equal factors coming from different squarefree layers
  std::vector<std::pair<FFPoly, int>> merged;
  for (auto& fm : out) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(fm);
  }
  return merged;
}

bool is_irreducible(const FiniteField& F, const FFPoly& f) {
  if (f.degree() < 1) return false;
  auto fs = factor(F, f);
  return fs.size() == 1 && fs[0].second == 1;
}

std::string str(const FiniteField& F, const FFPoly& a, char var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.c.size(); i-- > 0;) {
    if (F.is_zero(a.c[i])) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = F.is_one(a.c[i]);
    if (!unit || i == 0) os << F.str(a.c[i]);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace ff

namespace {

// Elements of F[y]/(psi) as vectors of F-coefficients (length f).
struct Algebra {
  const FiniteField& F;
  const FFPoly& psi;
  int f;

  std::vector<FElem> mul(const std::vector<FElem>& a, const std::vector<FElem>& b) const {
    FFPoly pa = ff::trim(F, FFPoly{a});
    FFPoly pb = ff::trim(F, FFPoly{b});
    FFPoly r = ff::mod(F, ff::mul(F, pa, pb), psi);
    std::vector<FElem> out(f, F.zero());
    for (size_t i = 0; i < r.c.size(); ++i) out[i] = r.c[i];
    return out;
  }

  std::vector<long> flat(const std::vector<FElem>& a) const {
    const int k = F.degree();
    std::vector<long> v(static_cast<size_t>(k) * f);
    for (int b = 0; b < f; ++b)
      for (int i = 0; i < k; ++i) v[i + k * b] = a[b][i];
    return v;
  }
};

}  // namespace

FieldExtension extend_field(const FieldPtr& base, const FFPoly& psi0, int max_degree) {
  const FiniteField& F = *base;
  FFPoly psi = ff::monic(F, psi0);
  const int f = psi.degree();
  if (f < 1) throw std::invalid_argument("extension by a constant polynomial");
  const int k = F.degree();
  const long p = F.characteristic();
  if (f == 1) {
    FieldExtension ext;
    ext.field = base;
    ext.gen_image = F.generator();
    ext.root = F.neg(psi.c[0]);
    ext.to_tower.assign(k, std::vector<long>(k, 0));
    for (int i = 0; i < k; ++i) ext.to_tower[i][i] = 1;
    return ext;
  }
  const int n = k * f;
  if (n > max_degree)
    throw FieldLimitError("residue field F_" + std::to_string(p) + "^" + std::to_string(n) +
                          " exceeds the configured limit k <= " + std::to_string(max_degree));
  Algebra A{F, psi, f};
  auto embed = [&](const FElem& c) {
    std::vector<FElem> v(f, F.zero());
    v[0] = c;
    return v;
  };
  std::vector<FElem> y(f, F.zero());
  y[1] = F.one();
  std::mt19937_64 rng(0x2545F491);
  for (long attempt = 0;; ++attempt) {
    std::vector<FElem> gamma = y;
    if (attempt > 0) {
      if (attempt < p && k > 1) {
        gamma[0] = F.mul(F.from_int(attempt), F.generator());
      } else {
        for (auto& c : gamma) c = F.random(rng);
      }
    }
    // columns: gamma^0 .. gamma^(n-1)
    Matrix P(n, std::vector<long>(n, 0));
    std::vector<FElem> pw = embed(F.one());
    for (int j = 0; j < n; ++j) {
      auto v = A.flat(pw);
      for (int i = 0; i < n; ++i) P[i][j] = v[i];
      pw = A.mul(pw, gamma);
    }
    auto Pinv = invert(P, p);
    if (!Pinv) continue;
    std::vector<long> xs = apply(*Pinv, A.flat(pw), p);
    std::vector<long> modulus(n + 1);
    for (int j = 0; j < n; ++j) modulus[j] = (p - xs[j]) % p;
    modulus[n] = 1;
    FieldExtension ext;
    ext.field = FiniteField::from_modulus(p, modulus);
    ext.gen_image = apply(*Pinv, A.flat(embed(F.generator())), p);
    ext.root = apply(*Pinv, A.flat(y), p);
    ext.to_tower = P;
    return ext;
  }
}

std::vector<FElem> tower_coordinates(const FieldExtension& ext, const FiniteField& base, int f,
                                     const FElem& c) {
  const int k = base.degree();
  std::vector<long> flat = apply(ext.to_tower, c, base.characteristic());
  std::vector<FElem> out(f, FElem(k, 0));
  for (int b = 0; b < f; ++b)
    for (int i = 0; i < k; ++i) out[b][i] = flat[i + k * b];
  return out;
}

}  // namespace vforge
