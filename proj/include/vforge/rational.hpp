#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace vforge {

using Integer = mpz_class;
using Rational = mpq_class;

// p-adic valuation of a nonzero integer or rational. Throws on zero.
long padic_valuation(const Integer& x, long p);
long padic_valuation(const Rational& x, long p);

// Residue in [0, p) of a rational that is a p-adic unit or p-integral.
long residue_mod(const Rational& x, long p);

// Generator of the subgroup aZ + bZ of Q (non-negative).
Rational rational_gcd(const Rational& a, const Rational& b);

bool is_integer(const Rational& x);
bool is_prime(long p);

Integer binomial(unsigned long n, unsigned long k);

std::string to_string(const Rational& x);

// Inverse modulo p (p prime, a not divisible by p).
long inverse_mod(long a, long p);

}  // namespace vforge
