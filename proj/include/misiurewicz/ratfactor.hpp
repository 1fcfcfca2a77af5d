#pragma once

// Factorization of integer polynomials over Q: squarefree split, factoring
// modulo a good prime, Hensel lifting and Zassenhaus subset recombination.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "misiurewicz/dense_poly.hpp"

namespace msw {

struct PolyFactor {
  IntPoly factor;  // primitive, irreducible over Q, positive leading coefficient
  unsigned multiplicity = 1;
};

struct PolyFactorization {
  mpq_class content;                // signed; the input is content * prod factors
  std::vector<PolyFactor> factors;  // sorted by (degree, coefficients)

  IntPoly product() const;  // throws InvalidArgument if content is not an integer
  // Number of irreducible factors counted with multiplicity.
  unsigned count() const;
  // "content * poly(c)=[...]^m * ..." in the intfactor product notation.
  std::string to_text() const;
};

PolyFactorization factor_over_Q(const IntPoly& p);

enum class IrreducibilityCertificate {
  kModular,        // irreducible modulo a prime not dividing lc * Disc
  kFactorization,  // decided by a full factorization over Q
};

struct IrreducibilityResult {
  bool irreducible = false;
  IrreducibilityCertificate certificate = IrreducibilityCertificate::kFactorization;
  std::uint64_t prime = 0;  // the certifying prime for kModular
  unsigned factor_count = 0;
};

// Throws InvalidArgument for degree < 1.
IrreducibilityResult is_irreducible_Q(const IntPoly& p);

namespace detail {

// Bound on the coefficients of any factor of p over Z:
// binom(n, floor(n/2)) * ceil(||p||_2), n = deg p (Mignotte).
mpz_class mignotte_bound(const IntPoly& p);

// Squarefree parts of a primitive polynomial with positive leading
// coefficient: pairs (part, multiplicity) with p = prod part^multiplicity.
std::vector<PolyFactor> squarefree_decomposition_Z(const IntPoly& p);

// Lifts a factorization p = lc(p) * prod u_i mod `prime` (u_i monic, pairwise
// coprime, p squarefree mod prime) to the same shape modulo `modulus`, which
// must be a power of `prime` of the form prime^(2^j).
std::vector<IntPoly> hensel_lift(const IntPoly& p, const std::vector<IntPoly>& factors_mod_p,
                                 const mpz_class& prime, const mpz_class& modulus);

}  // namespace detail

}  // namespace msw
