#pragma once

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vforge/rational.hpp"

namespace vforge {

// Element of F_p[t]/(M(t)): coordinates in the basis 1, t, ..., t^(k-1).
using FElem = std::vector<long>;

class FieldLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FiniteField {
 public:
  static constexpr int kDefaultMaxDegree = 8;

  static std::shared_ptr<const FiniteField> prime_field(long p);
  // modulus: monic coefficients low degree first (k + 1 entries). Not checked
  // for irreducibility here.
  static std::shared_ptr<const FiniteField> from_modulus(long p, std::vector<long> modulus);

  long characteristic() const { return p_; }
  int degree() const { return k_; }
  Integer order() const;
  const std::vector<long>& modulus() const { return mod_; }

  FElem zero() const { return FElem(k_, 0); }
  FElem one() const { return from_int(1); }
  FElem from_int(long c) const;
  // Class of t; equals 0 in the prime field F_p[t]/(t).
  FElem generator() const;

  bool is_zero(const FElem& a) const;
  bool is_one(const FElem& a) const;
  FElem add(const FElem& a, const FElem& b) const;
  FElem sub(const FElem& a, const FElem& b) const;
  FElem neg(const FElem& a) const;
  FElem mul(const FElem& a, const FElem& b) const;
  FElem inv(const FElem& a) const;
  FElem div(const FElem& a, const FElem& b) const { return mul(a, inv(b)); }
  FElem pow(const FElem& a, const Integer& e) const;
  FElem pow(const FElem& a, long e) const;
  FElem random(std::mt19937_64& rng) const;

  // Image of x, an element of `sub`, under the embedding sending the generator
  // of `sub` to gen_image.
  FElem map_from(const FiniteField& sub, const FElem& x, const FElem& gen_image) const;

  std::string str(const FElem& a) const;

 private:
  FiniteField(long p, std::vector<long> modulus);
  long p_;
  int k_;
  std::vector<long> mod_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Polynomial over a finite field, low degree first, trimmed.
struct FFPoly {
  std::vector<FElem> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool operator==(const FFPoly& o) const { return c == o.c; }
};

namespace ff {

FFPoly trim(const FiniteField& F, FFPoly a);
FFPoly constant(const FiniteField& F, const FElem& c);
FFPoly x(const FiniteField& F);
FFPoly add(const FiniteField& F, const FFPoly& a, const FFPoly& b);
FFPoly sub(const FiniteField& F, const FFPoly& a, const FFPoly& b);
FFPoly mul(const FiniteField& F, const FFPoly& a, const FFPoly& b);
FFPoly scale(const FiniteField& F, const FFPoly& a, const FElem& c);
std::pair<FFPoly, FFPoly> divmod(const FiniteField& F, const FFPoly& a, const FFPoly& b);
FFPoly mod(const FiniteField& F, const FFPoly& a, const FFPoly& b);
FFPoly monic(const FiniteField& F, const FFPoly& a);
FFPoly gcd(const FiniteField& F, FFPoly a, FFPoly b);
FFPoly derivative(const FiniteField& F, const FFPoly& a);
FFPoly powmod(const FiniteField& F, const FFPoly& base, const Integer& e, const FFPoly& m);
FElem eval(const FiniteField& F, const FFPoly& a, const FElem& x);
bool is_one(const FiniteField& F, const FFPoly& a);

// Monic irreducible factors with multiplicities, deterministic order
// (by degree, then coefficients). Input nonzero; the leading coefficient is
// dropped.
std::vector<std::pair<FFPoly, int>> factor(const FiniteField& F, const FFPoly& f);
bool is_irreducible(const FiniteField& F, const FFPoly& f);

std::string str(const FiniteField& F, const FFPoly& a, char var = 'y');

}  // namespace ff

// F' = F[y]/(psi) presented as a flat field F_p[t']/(M'), psi monic
// irreducible over F.
struct FieldExtension {
  FieldPtr field;
  FElem gen_image;  // image of the generator of F
  FElem root;       // class of y
  // Column j holds the tower coordinates (index a + k*b for t^a y^b) of t'^j.
  std::vector<std::vector<long>> to_tower;
};

FieldExtension extend_field(const FieldPtr& base, const FFPoly& psi,
                            int max_degree = FiniteField::kDefaultMaxDegree);

// Coordinates (d_0, ..., d_{f-1}) in the base field with c = sum d_b y^b.
std::vector<FElem> tower_coordinates(const FieldExtension& ext, const FiniteField& base, int f,
                                     const FElem& c);

}  // namespace vforge
