#include "vforge/rational.hpp"

#include <stdexcept>

namespace vforge {

long padic_valuation(const Integer& x, long p) {
  if (x == 0) throw std::domain_error("p-adic valuation of zero");
  Integer q = abs(x);
  const Integer pp = p;
  long v = 0;
  while (mpz_divisible_p(q.get_mpz_t(), pp.get_mpz_t())) {
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t());
    ++v;
  }
  return v;
}

long padic_valuation(const Rational& x, long p) {
  if (x == 0) throw std::domain_error("p-adic valuation of zero");
  return padic_valuation(Integer(x.get_num()), p) - padic_valuation(Integer(x.get_den()), p);
}

long residue_mod(const Rational& x, long p) {
  Integer num = x.get_num() % p;
  Integer den = x.get_den() % p;
  if (den == 0) throw std::domain_error("residue of a non-integral rational");
  long n = num.get_si();
  if (n < 0) n += p;
  long d = den.get_si();
  if (d < 0) d += p;
  return static_cast<long>((static_cast<__int128>(n) * inverse_mod(d, p)) % p);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(a + b);
  if (b == 0) return abs(a);
  Integer g;
  Integer l;
  // gcd(n1/d1, n2/d2) = gcd(n1 d2, n2 d1) / (d1 d2)
  Integer x = a.get_num() * b.get_den();
  Integer y = b.get_num() * a.get_den();
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Rational r(g, a.get_den() * b.get_den());
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

long inverse_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible modulo p");
  return t < 0 ? t + p : t;
}

}  // namespace vforge
