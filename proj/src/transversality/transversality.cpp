#include "misiurewicz/transversality.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

#include "misiurewicz/dynatomic.hpp"
#include "misiurewicz/error.hpp"
#include "misiurewicz/exactpoly.hpp"
#include "misiurewicz/intfactor.hpp"

namespace msw {

namespace {

struct Hit {
  TransFailure failure;
  std::uint64_t order_key;  // enumeration index of c, for deterministic sorting
};

template <typename F>
void scan_field(const F& field, const ScanOptions& o, std::uint64_t p, std::vector<Hit>& out) {
  const std::uint64_t q = field.size();
  for (std::uint64_t i = 0; i < q; ++i) {
    const auto c = field.element(i);
    const auto period = min_period_2d(field, o.d, c, o.n_max);
    if (!period || *period < o.n_min) continue;
    TransFailure f;
    f.d = o.d;
    f.n = *period;
    f.p = p;
    f.k = field.degree_of(c);
    f.c = field.to_text(c);
    f.minimal_period = *period;
    out.push_back({std::move(f), i});
  }
}

std::vector<Hit> scan_prime(const ScanOptions& o, std::uint64_t p) {
  std::vector<Hit> hits;
  const PrimeField base(p);
  if (o.k == 1) {
    scan_field(base, o, p, hits);
  } else {
    scan_field(ExtField::create(base, o.k), o, p, hits);
  }
  return hits;
}

mpz_class disc_of_iterate(unsigned d, unsigned n) { return discriminant(critical_iterate(d, n)); }

}  // namespace

mpz_class disc_gleason(unsigned d, unsigned m, unsigned n) {
  const IntPoly g = gleason(d, m, n).poly;
  if (g.degree() < 1) throw InvalidArgument("G_d(m,n) is constant; its discriminant is undefined");
  return discriminant(g);
}

std::string ScanResult::to_tsv() const {
  std::ostringstream os;
  os << "d\tn\tp\tk\tc\tperiod\n";
  for (const auto& f : failures) {
    os << f.d << '\t' << f.n << '\t' << f.p << '\t' << f.k << '\t' << f.c << '\t' << f.minimal_period << '\n';
  }
  return os.str();
}

std::vector<std::pair<unsigned, std::uint64_t>> ScanResult::pairs() const {
  std::vector<std::pair<unsigned, std::uint64_t>> out;
  for (const auto& f : failures) out.emplace_back(f.n, f.p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ScanResult scan_primes(const ScanOptions& o) {
  if (o.d < 2) throw InvalidArgument("degree d must be >= 2");
  if (o.k < 1) throw InvalidArgument("extension degree k must be >= 1");
  if (o.n_max < 1 || o.n_min > o.n_max) throw InvalidArgument("empty period range");
  const std::vector<std::uint64_t> primes = primes_up_to(o.p_max);
  std::vector<std::vector<Hit>> per_prime(primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) per_prime[i] = scan_prime(o, primes[i]);
  };
  const unsigned jobs = std::max(1u, o.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  ScanResult result;
  for (auto& hits : per_prime) {
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
      return std::tie(a.failure.n, a.failure.k, a.order_key) < std::tie(b.failure.n, b.failure.k, b.order_key);
    });
    for (auto& h : hits) {
      ++result.histogram[h.failure.p][h.failure.k];
      result.failures.push_back(std::move(h.failure));
    }
  }
  return result;
}

Point3 step_3d(unsigned d, const Point3& s) {
  const IntPoly xd1 = pow(s[0], d - 1);
  const IntPoly dd(mpz_class(d), s[0].var());
  const IntPoly one(mpz_class(1), s[0].var());
  return {s[1], pow(s[1], d) + s[1] - xd1 * s[0], dd * xd1 * s[2] + one};
}

ReformCheck reform_equivalence_check(unsigned d, std::uint64_t p, unsigned n, std::uint64_t seed) {
  ReformCheck r;
  const PrimeField base(p);
  const auto g = reduce_mod_p(gleason(d, 0, n).poly, p);
  const auto s = gcd(g, g.derivative());
  r.repeated_root = s.degree() > 0;
  bool every_root_has_period_n = true;
  if (r.repeated_root) {
    for (const auto& fac : factor_mod(s, seed).factors) {
      const int deg = fac.factor.degree();
      r.repeated_factor_degrees.push_back(deg);
      auto check_roots = [&](const auto& field, const auto& roots) {
        for (const auto& [c, mult] : roots) {
          (void)mult;
          if (min_period_2d(field, d, c, n) == std::optional<unsigned>(n)) {
            ++r.roots_with_period_n;
          } else {
            every_root_has_period_n = false;
          }
        }
      };
      if (deg == 1) {
        check_roots(base, roots_in_field(fac.factor, base));
      } else {
        const ExtField ext = ExtField::create(base, static_cast<unsigned>(deg));
        check_roots(ext, roots_in_field(fac.factor, ext));
      }
    }
  } else {
    for (std::uint64_t i = 0; i < p; ++i) {
      if (min_period_2d(base, d, base.element(i), n) == std::optional<unsigned>(n)) ++r.roots_with_period_n;
    }
  }
  r.consistent = every_root_has_period_n && (r.repeated_root == (r.roots_with_period_n > 0));
  return r;
}

RamificationReport ramification_report(const IntPoly& g, std::uint64_t p, unsigned long observed_valuation) {
  if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p)) {
    throw InvalidArgument("prime " + std::to_string(p) + " divides the leading coefficient");
  }
  RamificationReport r;
  r.p = p;
  r.observed_valuation = observed_valuation;
  for (const auto& fac : factor_mod(reduce_mod_p(g, p)).factors) {
    const unsigned e = fac.multiplicity;
    const unsigned f = static_cast<unsigned>(fac.factor.degree());
    r.ef.emplace_back(e, f);
    r.lower_bound += static_cast<unsigned long>(e - 1) * f;
    if (std::gcd<std::uint64_t>(e, p) != 1) r.tame = false;
  }
  return r;
}

IntPoly collapse_to_t(unsigned d, unsigned n) {
  if (d < 2) throw InvalidArgument("degree d must be >= 2");
  const IntPoly f = critical_iterate(d, n);
  const std::size_t step = d - 1;
  std::vector<mpz_class> h;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (sgn(f.coeffs()[i]) == 0) continue;
    if (i == 0 || (i - 1) % step != 0) {
      throw PatternViolation("f^" + std::to_string(n) + "(0) has a term c^" + std::to_string(i) +
                             " with exponent not 1 mod " + std::to_string(step));
    }
    const std::size_t j = (i - 1) / step;
    if (h.size() <= j) h.resize(j + 1);
    h[j] = f.coeffs()[i];
  }
  return IntPoly(std::move(h), "t");
}

mpz_class resultant_coprime_check(unsigned d, unsigned n, unsigned m) {
  if (n == m) throw InvalidArgument("resultant check needs n != m");
  return resultant(gleason(d, 0, n).poly, gleason(d, 0, m).poly);
}

bool disc_multiplicativity_check(unsigned d, unsigned n) {
  mpz_class product = 1;
  for (unsigned k = 1; k <= n; ++k)
    if (n % k == 0) product *= disc_gleason(d, 0, k);
  return product == disc_of_iterate(d, n);
}

bool divisibility_sequence_check(unsigned d, unsigned n_max) {
  std::vector<mpz_class> a(n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) a[n] = disc_of_iterate(d, n);
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned m = 1; m <= n; ++m)
      if (n % m == 0 && !mpz_divisible_p(a[n].get_mpz_t(), a[m].get_mpz_t())) return false;
  return true;
}

}  // namespace msw
