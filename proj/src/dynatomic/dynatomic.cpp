#include "misiurewicz/dynatomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "misiurewicz/error.hpp"
#include "misiurewicz/resource.hpp"

namespace msw {

namespace {

std::mutex g_cache_mutex;
std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const IntPoly>> g_cache;

void check_degree(unsigned d, unsigned n) {
  if (d < 2) throw InvalidArgument("degree d must be >= 2");
  if (n < 1) throw InvalidArgument("period n must be >= 1");
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

// Exact quotient of the Mobius products: numerator over k with mu = 1,
// denominator over mu = -1.
template <typename Term>
IntPoly mobius_quotient(unsigned n, Term&& term) {
  IntPoly num(mpz_class(1), "c"), den(mpz_class(1), "c");
  for (unsigned k : divisors(n)) {
    const int mu = mobius(n / k);
    if (mu == 1) num *= term(k);
    if (mu == -1) den *= term(k);
  }
  return exact_div(num, den);
}

}  // namespace

IntPoly critical_iterate(unsigned d, unsigned n) {
  if (d < 2) throw InvalidArgument("degree d must be >= 2");
  if (n == 0) return IntPoly(std::vector<mpz_class>{}, "c");
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find({d, n});
    if (it != g_cache.end()) return *it->second;
  }
  // d^(n-1) + 1 coefficients, checked without overflow.
  std::uint64_t degree = 1;
  for (unsigned i = 1; i < n; ++i) {
    if (degree > resource_cap()) break;
    degree *= d;
  }
  check_resource(degree + 1, "f^" + std::to_string(n) + "(0) for d=" + std::to_string(d));
  const IntPoly c = IntPoly::variable("c");
  IntPoly result = n == 1 ? c : pow(critical_iterate(d, n - 1), d) + c;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(std::make_pair(d, n), std::make_shared<const IntPoly>(result));
  return result;
}

void clear_iterate_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.clear();
}

int mobius(unsigned n) {
  if (n == 0) throw InvalidArgument("mobius(0)");
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

IntPoly dynatomic_periodic(unsigned d, unsigned n) {
  check_degree(d, n);
  return mobius_quotient(n, [d](unsigned k) { return critical_iterate(d, k); });
}

IntPoly F_k_poly(unsigned d, unsigned m, unsigned k) {
  check_degree(d, k);
  if (m < 1) throw InvalidArgument("F_k needs preperiod m >= 1");
  const IntPoly num = critical_iterate(d, m + k) - critical_iterate(d, m);
  const IntPoly den = critical_iterate(d, m + k - 1) - critical_iterate(d, m - 1);
  return exact_div(num, den);
}

IntPoly dynatomic_preperiodic(unsigned d, unsigned m, unsigned n) {
  check_degree(d, n);
  if (m < 1) throw InvalidArgument("preperiodic dynatomic polynomial needs m >= 1");
  return mobius_quotient(n, [d, m](unsigned k) { return F_k_poly(d, m, k); });
}

GleasonResult gleason(unsigned d, unsigned m, unsigned n) {
  check_degree(d, n);
  GleasonResult r;
  r.d = d;
  r.pair = {m, n};
  if (m == 0) {
    r.poly = dynatomic_periodic(d, n);
    return r;
  }
  r.poly = dynatomic_preperiodic(d, m, n);
  if ((m - 1) % n == 0) {
    r.special_case = true;
    r.poly = exact_div(r.poly, pow(dynatomic_periodic(d, n), d - 1));
  }
  return r;
}

mpz_class misiurewicz_count(unsigned d, unsigned m, unsigned n) {
  check_degree(d, n);
  mpz_class inner = 0;
  for (unsigned k : divisors(n)) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), d, k - 1);
    inner += mobius(n / k) * t;
  }
  if (m == 0) return inner;
  mpz_class dm, dm1;
  mpz_ui_pow_ui(dm.get_mpz_t(), d, m);
  mpz_ui_pow_ui(dm1.get_mpz_t(), d, m - 1);
  if ((m - 1) % n == 0) return (dm - dm1 - d + 1) * inner;
  return (dm - dm1) * inner;
}

}  // namespace msw
