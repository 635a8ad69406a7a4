#include "vforge/sampler.hpp"

namespace vforge {

std::uint64_t mix_seed(std::uint64_t seed, std::string_view stream) {
  // FNV-1a over the stream name, then a splitmix64 finalizer.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stream) h = (h ^ c) * 0x100000001b3ULL;
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (h | 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PolySampler::PolySampler(long p, std::uint64_t seed) : p_(p), rng_(seed) {}

PolySampler::PolySampler(long p, std::uint64_t seed, std::string_view stream)
    : p_(p), rng_(mix_seed(seed, stream)) {}

long PolySampler::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

Rational PolySampler::coefficient() {
  long u = uniform(-5, 5);
  long k = uniform(0, 3);
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(k));
  return Rational(u * pk);
}

Rational PolySampler::unit_coefficient() {
  for (;;) {
    Rational c = coefficient();
    if (c != 0) return c;
  }
}

Poly PolySampler::monic(int degree) {
  std::vector<Rational> c(degree + 1);
  for (int i = 0; i < degree; ++i) c[i] = coefficient();
  c[degree] = 1;
  return Poly(std::move(c));
}

Poly PolySampler::any(int max_degree) {
  int d = static_cast<int>(uniform(0, max_degree));
  std::vector<Rational> c(d + 1);
  for (int i = 0; i < d; ++i) c[i] = coefficient();
  c[d] = unit_coefficient();
  return Poly(std::move(c));
}

Rational PolySampler::center() {
  switch (uniform(0, 4)) {
    case 0: return Rational(uniform(-20, 20));
    case 1: return coefficient();
    case 2: return Rational(uniform(-9, 9)) + coefficient() * p_;
    case 3: return unit_coefficient() / p_;
    default: {
      Rational r(uniform(-12, 12), uniform(1, 4));
      r.canonicalize();
      return r;
    }
  }
}

}  // namespace vforge
