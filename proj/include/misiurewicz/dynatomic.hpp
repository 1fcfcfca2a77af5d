#pragma once

// Critical orbits of f_c(z) = z^d + c, dynatomic polynomials at the critical
// point, Gleason polynomials G_d(m,n) and the Misiurewicz point count.

#include <gmpxx.h>

#include "misiurewicz/dense_poly.hpp"

namespace msw {

struct PeriodPair {
  unsigned m = 0;  // preperiod
  unsigned n = 1;  // period, >= 1
};

struct GleasonResult {
  unsigned d = 2;
  PeriodPair pair;
  IntPoly poly;
  // m != 0 and n | (m - 1): the periodic factor was divided out d - 1 times.
  bool special_case = false;
};

// f^n(0) in Z[c], with f^0(0) = 0. Memoized per (d, n) in a thread-safe
// cache; throws ResourceCapExceeded when d^(n-1) + 1 exceeds the cap.
IntPoly critical_iterate(unsigned d, unsigned n);

int mobius(unsigned n);

// prod_{k | n} f^k(0)^mu(n/k).
IntPoly dynatomic_periodic(unsigned d, unsigned n);

// (f^(m+k)(0) - f^m(0)) / (f^(m+k-1)(0) - f^(m-1)(0)), for m >= 1.
IntPoly F_k_poly(unsigned d, unsigned m, unsigned k);

// prod_{k | n} F_k^mu(n/k), for m >= 1.
IntPoly dynatomic_preperiodic(unsigned d, unsigned m, unsigned n);

GleasonResult gleason(unsigned d, unsigned m, unsigned n);

// Number of c with 0 of exact period (m, n) under z^d + c. The inner sum runs
// over k | n.
mpz_class misiurewicz_count(unsigned d, unsigned m, unsigned n);

// Drops all memoized iterates.
void clear_iterate_cache();

}  // namespace msw
