#pragma once

// The bicritical cubic family g_{a,v}(z) = z^3 - 3a^2 z + 2a^3 + v with
// critical points +a and -a and critical value g(a) = v. Polynomials in
// Z[a,v] are BiPolys with outer variable v and inner variable a.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "misiurewicz/dense_poly.hpp"
#include "misiurewicz/dynatomic.hpp"

namespace msw {

enum class CriticalSign { kPlus, kMinus };

using Complex = std::complex<long double>;

// g_{a,v}(z) for z in Z[a,v].
BiPoly cubic_map(const BiPoly& z);

// g^n(+a) or g^n(-a); g^0 is the critical point itself.
BiPoly g_iterate(unsigned n, CriticalSign sign);

// F^2 + FG + G^2 - 3a^2 with F = g^(m+k-1)(z0), G = g^(m-1)(z0). Equals
// (g^(m+k) - g^m) / (g^(m+k-1) - g^(m-1)) at z0. Needs m >= 1, k >= 1.
BiPoly Fk_bicritical(unsigned m, unsigned k, CriticalSign sign);

struct TPoly {
  PeriodPair pair;
  CriticalSign sign = CriticalSign::kPlus;
  BiPoly poly;
  // m != 0 and n | (m - 1): divided once by the periodic factor.
  bool special_case = false;
};

// T(m, n, +-a): the bicritical analogue of the Gleason polynomial.
TPoly T_poly(unsigned m, unsigned n, CriticalSign sign);

struct Portrait {
  PeriodPair plus;   // orbit of +a
  PeriodPair minus;  // orbit of -a
};

// Smallest n <= n_max, then smallest m <= n_max, with
// |g^m(z0) - g^(m+n)(z0)| < tol. Throws NoPeriodFound.
Portrait orbit_portrait(Complex a, Complex v, unsigned n_max, long double tol = 1e-6L);

// det [[dP/da, dP/dv], [dQ/da, dQ/dv]] at (a, v).
Complex jacobian_det(const BiPoly& p, const BiPoly& q, Complex a, Complex v);

struct PcfSolution {
  Complex a;
  Complex v;
  long double radius = 0;  // certified inclusion radius for a
  IntPoly eliminant;       // primitive Res_v(T1, T2), shared by all solutions
  std::optional<Portrait> portraits;
  Complex jacobian;
  bool excluded = false;
};

struct PcfOptions {
  long double tol = 1e-8L;
  unsigned jobs = 1;
};

// Points of V(T(m1,n1,a), T(m2,n2,-a)), ordered by (Re a, Im a, Re v, Im v).
// When n1 = n2 divides both m1 - 1 and m2 - 1, points with a = 0 and v a
// root of G_3(0,n1) are kept but flagged excluded. Throws IllConditioned if
// the roots of the eliminant cannot be separated at tol.
std::vector<PcfSolution> pcf_solve(unsigned m1, unsigned n1, unsigned m2, unsigned n2, const PcfOptions& options = {});

// Simultaneous root approximation (Aberth), then Newton polishing. Returns
// every root of a squarefree p with its certified inclusion radius; throws
// IllConditioned when the inclusion disks overlap or exceed tol.
std::vector<std::pair<Complex, long double>> isolate_roots(const IntPoly& p, long double tol);

// Roots of a complex polynomial given low-to-high coefficients.
std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs);

}  // namespace msw
