#pragma once

// Discriminants of Gleason polynomials and the primes where they vanish:
// the planar map F_{d,c}(x,y) = (x^d + c, d x^(d-1) y + 1) over finite
// fields, the single 3D map R_d, ramification bounds and the resultant and
// divisibility identities.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "misiurewicz/dense_poly.hpp"
#include "misiurewicz/finitefield.hpp"

namespace msw {

// Disc(G_d(m,n)). Throws InvalidArgument when G is constant.
mpz_class disc_gleason(unsigned d, unsigned m, unsigned n);

// ---- The planar map F_{d,c} ---------------------------------------------------

template <typename F>
using Point2 = std::pair<typename F::Elem, typename F::Elem>;

template <typename F>
Point2<F> step_2d(const F& field, unsigned d, const typename F::Elem& c, const Point2<F>& s) {
  const auto xd1 = field.pow(s.first, static_cast<std::uint64_t>(d - 1));
  const auto x = field.add(field.mul(xd1, s.first), c);
  const auto y = field.add(field.mul(field.mul(field.from_int(static_cast<long>(d)), xd1), s.second), field.one());
  return {x, y};
}

// Least n <= n_max with F^n(0,0) = (0,0).
template <typename F>
std::optional<unsigned> min_period_2d(const F& field, unsigned d, const typename F::Elem& c, unsigned n_max) {
  Point2<F> s{field.zero(), field.zero()};
  for (unsigned n = 1; n <= n_max; ++n) {
    s = step_2d(field, d, c, s);
    if (field.is_zero(s.first) && field.is_zero(s.second)) return n;
  }
  return std::nullopt;
}

struct TransFailure {
  unsigned d = 2;
  unsigned n = 0;
  std::uint64_t p = 0;
  unsigned k = 1;  // degree over F_p of the smallest field containing c
  std::string c;   // canonical element text in the scanned field
  unsigned minimal_period = 0;
};

struct ScanOptions {
  unsigned d = 2;
  unsigned n_min = 1;
  unsigned n_max = 1;
  std::uint64_t p_max = 2;
  unsigned k = 1;  // scan all of F_{p^k}
  unsigned jobs = 1;
};

struct ScanResult {
  std::vector<TransFailure> failures;  // sorted by (p, n, k, c)
  // prime -> (field degree k -> number of failures)
  std::map<std::uint64_t, std::map<unsigned, unsigned>> histogram;

  // Header "d\tn\tp\tk\tc\tperiod" then one row per failure.
  std::string to_tsv() const;
  // Distinct (n, p) pairs.
  std::vector<std::pair<unsigned, std::uint64_t>> pairs() const;
};

// Every c in F_{p^k} for primes p <= p_max whose point (0,0) has minimal
// period in [n_min, n_max]. Parallel over primes; output does not depend on
// `jobs`.
ScanResult scan_primes(const ScanOptions& options);

// ---- The 3D map R_d(x,y,z) = (y, y^d + y - x^d, d x^(d-1) z + 1) -----------------

using Point3 = std::array<IntPoly, 3>;
Point3 step_3d(unsigned d, const Point3& s);

template <typename F>
std::array<typename F::Elem, 3> step_3d(const F& field, unsigned d, const std::array<typename F::Elem, 3>& s) {
  const auto xd1 = field.pow(s[0], static_cast<std::uint64_t>(d - 1));
  const auto xd = field.mul(xd1, s[0]);
  const auto yd = field.pow(s[1], static_cast<std::uint64_t>(d));
  return {s[1], field.sub(field.add(yd, s[1]), xd),
          field.add(field.mul(field.mul(field.from_int(static_cast<long>(d)), xd1), s[2]), field.one())};
}

struct ReformCheck {
  bool consistent = false;
  bool repeated_root = false;                // gcd(G mod p, G' mod p) nonconstant
  std::vector<int> repeated_factor_degrees;  // degrees of the irreducible factors of that gcd
  unsigned roots_with_period_n = 0;
};

// Checks that G_d(0,n) has a repeated root mod p exactly when some c over a
// finite field gives (0,0) minimal period n. Repeated roots are located in
// F_{p^deg w} for each irreducible factor w of the gcd; every such root must
// have period exactly n. With no repeated root, F_p is scanned and must have
// no period-n point.
ReformCheck reform_equivalence_check(unsigned d, std::uint64_t p, unsigned n, std::uint64_t seed = 0x5eedULL);

struct RamificationReport {
  std::uint64_t p = 0;
  std::vector<std::pair<unsigned, unsigned>> ef;  // (e_i, f_i)
  unsigned long lower_bound = 0;                  // sum (e_i - 1) f_i
  unsigned long observed_valuation = 0;
  bool tame = true;  // every gcd(e_i, p) = 1

  bool bound_holds() const { return observed_valuation >= lower_bound; }
};

// Throws InvalidArgument when p divides lc(g).
RamificationReport ramification_report(const IntPoly& g, std::uint64_t p, unsigned long observed_valuation);

// h(t) with c * h(c^(d-1)) = f^n(0). Throws PatternViolation if some exponent
// of f^n(0) is not 1 mod (d - 1).
IntPoly collapse_to_t(unsigned d, unsigned n);

// Res(G_d(0,n), G_d(0,m)), for n != m.
mpz_class resultant_coprime_check(unsigned d, unsigned n, unsigned m);

// Disc(f^n(0)) == prod_{k | n} D_d(0,k).
bool disc_multiplicativity_check(unsigned d, unsigned n);

// A_m | A_n for all m | n <= n_max, A_n = Disc(f^n(0)).
bool divisibility_sequence_check(unsigned d, unsigned n_max);

}  // namespace msw
