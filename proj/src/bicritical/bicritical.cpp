#include "misiurewicz/bicritical.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>
#include <tuple>

#include "misiurewicz/error.hpp"
#include "misiurewicz/exactpoly.hpp"
#include "misiurewicz/ratfactor.hpp"
#include "misiurewicz/resource.hpp"

namespace msw {

namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();

IntPoly a_poly(std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return IntPoly(std::move(z), "a");
}

BiPoly lift(const IntPoly& p) { return lift_inner(p, "v"); }

BiPoly v_var() { return BiPoly(std::vector<IntPoly>{a_poly({}), a_poly({1})}, "v"); }

BiPoly critical_point(CriticalSign sign) { return lift(a_poly({0, sign == CriticalSign::kPlus ? 1 : -1})); }

std::string sign_text(CriticalSign sign) { return sign == CriticalSign::kPlus ? "+a" : "-a"; }

std::mutex g_cache_mutex;
std::map<std::pair<unsigned, CriticalSign>, std::shared_ptr<const BiPoly>> g_cache;

bool divides_signed(unsigned n, long x) { return x % static_cast<long>(n) == 0; }

// Periodic part prod_{k | n} (g^k(z0) - z0)^mu(n/k).
BiPoly periodic_factor(unsigned n, CriticalSign sign) {
  const BiPoly z0 = critical_point(sign);
  BiPoly num = lift(a_poly({1})), den = lift(a_poly({1}));
  for (unsigned k = 1; k <= n; ++k) {
    if (n % k) continue;
    const int mu = mobius(n / k);
    if (mu == 1) num = num * (g_iterate(k, sign) - z0);
    if (mu == -1) den = den * (g_iterate(k, sign) - z0);
  }
  return exact_div(num, den);
}

struct Eval {
  Complex value;
  Complex deriv;
  long double scale;  // sum |c_i| |z|^i, for relative residuals
};

Eval horner(const std::vector<Complex>& c, Complex z) {
  Eval e{0, 0, 0};
  const long double r = std::abs(z);
  for (std::size_t i = c.size(); i-- > 0;) {
    e.deriv = e.deriv * z + e.value;
    e.value = e.value * z + c[i];
    e.scale = e.scale * r + std::abs(c[i]);
  }
  return e;
}

std::vector<Complex> to_complex(const IntPoly& p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(to_long_double(x), 0.0L);
  return c;
}

// Zeroes a real or imaginary part that is rounding noise, so conjugate and
// symmetric solutions order consistently.
Complex snap(Complex z) {
  const long double floor = 1e-24L * (1 + std::abs(z));
  return {std::abs(z.real()) < floor ? 0.0L : z.real(), std::abs(z.imag()) < floor ? 0.0L : z.imag()};
}

Complex newton_polish(const std::vector<Complex>& c, Complex z) {
  long double best = std::numeric_limits<long double>::infinity();
  for (int it = 0; it < 50; ++it) {
    const Eval e = horner(c, z);
    const long double rel = e.scale > 0 ? std::abs(e.value) / e.scale : 0;
    if (rel >= best || e.deriv == Complex(0)) break;
    best = rel;
    if (rel < kEps) break;
    z -= e.value / e.deriv;
  }
  return z;
}

}  // namespace

BiPoly cubic_map(const BiPoly& z) {
  return z * z * z - lift(a_poly({0, 0, 3})) * z + lift(a_poly({0, 0, 0, 2})) + v_var();
}

BiPoly g_iterate(unsigned n, CriticalSign sign) {
  if (n == 0) return critical_point(sign);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find({n, sign});
    if (it != g_cache.end()) return *it->second;
  }
  // Degree 3^(n-1) in v and 3^n in a.
  std::uint64_t dv = 1;
  for (unsigned i = 1; i < n && dv <= resource_cap(); ++i) dv *= 3;
  const std::uint64_t coefficients = dv > resource_cap() ? dv : (dv + 1) * (3 * dv + 1);
  check_resource(coefficients, "g^" + std::to_string(n) + "(" + sign_text(sign) + ")");
  BiPoly result = cubic_map(g_iterate(n - 1, sign));
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(std::make_pair(n, sign), std::make_shared<const BiPoly>(result));
  return result;
}

BiPoly Fk_bicritical(unsigned m, unsigned k, CriticalSign sign) {
  if (m < 1 || k < 1) throw InvalidArgument("Fk_bicritical needs m >= 1 and k >= 1");
  const BiPoly f = g_iterate(m + k - 1, sign);
  const BiPoly g = g_iterate(m - 1, sign);
  return f * f + f * g + g * g - lift(a_poly({0, 0, 3}));
}

TPoly T_poly(unsigned m, unsigned n, CriticalSign sign) {
  if (n < 1) throw InvalidArgument("period n must be >= 1");
  TPoly t;
  t.pair = {m, n};
  t.sign = sign;
  if (m == 0) {
    t.poly = periodic_factor(n, sign);
    return t;
  }
  BiPoly num = lift(a_poly({1})), den = lift(a_poly({1}));
  for (unsigned k = 1; k <= n; ++k) {
    if (n % k) continue;
    const int mu = mobius(n / k);
    if (mu == 1) num = num * Fk_bicritical(m, k, sign);
    if (mu == -1) den = den * Fk_bicritical(m, k, sign);
  }
  t.poly = exact_div(num, den);
  if ((m - 1) % n == 0) {
    t.special_case = true;
    t.poly = exact_div(t.poly, periodic_factor(n, sign));
  }
  return t;
}

Portrait orbit_portrait(Complex a, Complex v, unsigned n_max, long double tol) {
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
  auto g = [&](Complex z) { return z * z * z - 3.0L * a * a * z + 2.0L * a * a * a + v; };
  auto portrait_of = [&](Complex z0) {
    std::vector<Complex> orbit{z0};
    for (unsigned i = 0; i < 2 * n_max; ++i) {
      orbit.push_back(g(orbit.back()));
      if (!std::isfinite(orbit.back().real()) || !std::isfinite(orbit.back().imag())) {
        throw NoPeriodFound("critical orbit escapes before step " + std::to_string(2 * n_max));
      }
    }
    for (unsigned n = 1; n <= n_max; ++n)
      for (unsigned m = 0; m <= n_max; ++m)
        if (std::abs(orbit[m] - orbit[m + n]) < tol) return PeriodPair{m, n};
    throw NoPeriodFound("no (m, n) with m, n <= " + std::to_string(n_max));
  };
  return {portrait_of(a), portrait_of(-a)};
}

Complex jacobian_det(const BiPoly& p, const BiPoly& q, Complex a, Complex v) {
  const Complex pa = evaluate(derivative_inner(p), a, v);
  const Complex pv = evaluate(p.derivative(), a, v);
  const Complex qa = evaluate(derivative_inner(q), a, v);
  const Complex qv = evaluate(q.derivative(), a, v);
  return pa * qv - pv * qa;
}

std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  if (c.empty()) throw InvalidArgument("roots of the zero polynomial");
  std::vector<Complex> roots;
  std::size_t low = 0;
  while (low + 1 < c.size() && c[low] == Complex(0)) {
    roots.emplace_back(0);
    ++low;
  }
  c.erase(c.begin(), c.begin() + static_cast<long>(low));
  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;
  // Fujiwara bound on the root moduli.
  long double radius = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double r = std::pow(std::abs(c[i] / c[n]), 1.0L / static_cast<long double>(n - i));
    radius = std::max(radius, r);
  }
  radius = std::max(2 * radius, 1e-3L);
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = std::polar(radius, 2 * std::numbers::pi_v<long double> * static_cast<long double>(i) /
                                      static_cast<long double>(n) + 0.4L);
  }
  for (int it = 0; it < 2000; ++it) {
    long double biggest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Eval e = horner(c, z[i]);
      if (e.value == Complex(0)) continue;
      const Complex ratio = e.value / e.deriv;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      const Complex w = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      biggest = std::max(biggest, std::abs(w) / (1 + std::abs(z[i])));
    }
    if (biggest < 4 * kEps) break;
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<std::pair<Complex, long double>> isolate_roots(const IntPoly& p, long double tol) {
  if (p.degree() < 1) return {};
  const std::vector<Complex> c = to_complex(p);
  std::vector<Complex> z = complex_roots(c);
  for (auto& x : z) x = newton_polish(c, x);
  const std::size_t n = z.size();
  std::vector<std::pair<Complex, long double>> out;
  for (std::size_t i = 0; i < n; ++i) {
    // Inclusion disk: n |p(z_i)| / |lc prod_{j != i} (z_i - z_j)|, with the
    // evaluation error of the long double arithmetic added to |p(z_i)|.
    const Eval e = horner(c, z[i]);
    const long double value = std::abs(e.value) + 4 * static_cast<long double>(n + 1) * kEps * e.scale;
    long double den = std::abs(c.back());
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den *= std::abs(z[i] - z[j]);
    const long double r = den > 0 ? static_cast<long double>(n) * value / den
                                  : std::numeric_limits<long double>::infinity();
    if (!(r <= tol)) {
      throw IllConditioned("root near " + std::to_string(static_cast<double>(z[i].real())) + "+" +
                           std::to_string(static_cast<double>(z[i].imag())) + "i not isolated within tol");
    }
    out.emplace_back(z[i], r);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(out[i].first - out[j].first) <= out[i].second + out[j].second) {
        throw IllConditioned("inclusion disks of two roots overlap");
      }
  return out;
}

std::vector<PcfSolution> pcf_solve(unsigned m1, unsigned n1, unsigned m2, unsigned n2, const PcfOptions& o) {
  const BiPoly t1 = T_poly(m1, n1, CriticalSign::kPlus).poly;
  const BiPoly t2 = T_poly(m2, n2, CriticalSign::kMinus).poly;
  for (const BiPoly* t : {&t1, &t2}) {
    if (t->degree() >= 1) continue;
    if (t->degree() == 0 && t->leading().degree() == 0) return {};
    throw InvalidArgument("T polynomial does not involve v; the variety is not finite");
  }
  const IntPoly res = resultant(t1, t2);
  if (res.is_zero()) throw IllConditioned("T polynomials share a common component");
  if (res.degree() < 1) return {};
  const IntPoly eliminant = content_primitive(res).primitive.with_var("a");

  // Roots of distinct irreducible factors are distinct, so each factor is
  // isolated on its own and the disks are then checked against each other.
  std::vector<std::pair<Complex, long double>> roots;
  for (const auto& f : factor_over_Q(eliminant).factors) {
    for (auto& r : isolate_roots(f.factor, o.tol)) roots.push_back(r);
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i].first - roots[j].first) <= roots[i].second + roots[j].second) {
        throw IllConditioned("inclusion disks of two roots overlap");
      }

  const bool exclusion = n1 == n2 && divides_signed(n1, static_cast<long>(m1) - 1) &&
                         divides_signed(n1, static_cast<long>(m2) - 1);
  std::vector<Complex> excluded_v;
  if (exclusion) {
    const IntPoly g3 = gleason(3, 0, n1).poly;
    if (g3.degree() >= 1) excluded_v = complex_roots(to_complex(g3));
  }
  const unsigned n_max = std::max({m1, m2, n1, n2}) + 2;

  std::vector<std::vector<PcfSolution>> per_root(roots.size());
  auto solve_at = [&](std::size_t idx) {
    const auto [a, radius] = roots[idx];
    const auto s1 = specialize_inner(t1, a);
    const auto s2 = specialize_inner(t2, a);
    const bool first_smaller = s1.size() <= s2.size();
    const auto& source = first_smaller ? s1 : s2;
    const auto& other = first_smaller ? s2 : s1;
    std::vector<Complex> found;
    for (Complex v : complex_roots(source)) {
      const Eval e = horner(other, v);
      if (e.scale > 0 && std::abs(e.value) / e.scale > 1e-7L) continue;
      const Eval es = horner(source, v);
      if (std::abs(es.deriv) > 1e-6L * es.scale) v = newton_polish(source, v);
      const bool duplicate =
          std::any_of(found.begin(), found.end(), [&](Complex w) { return std::abs(w - v) < 1e-6L * (1 + std::abs(v)); });
      if (!duplicate) found.push_back(v);
    }
    if (found.empty()) throw IllConditioned("no common root in v at a root of the eliminant");
    for (const Complex v : found) {
      PcfSolution s;
      s.a = snap(a);
      s.v = snap(v);
      s.radius = radius;
      s.eliminant = eliminant;
      s.jacobian = jacobian_det(t1, t2, a, v);
      try {
        s.portraits = orbit_portrait(a, v, n_max);
      } catch (const NoPeriodFound&) {
        s.portraits.reset();
      }
      if (exclusion && std::abs(a) < o.tol) {
        s.excluded = std::any_of(excluded_v.begin(), excluded_v.end(),
                                 [&](Complex w) { return std::abs(w - v) < std::max(o.tol, 1e-6L); });
      }
      per_root[idx].push_back(std::move(s));
    }
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      try {
        solve_at(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, o.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<PcfSolution> out;
  for (auto& group : per_root)
    for (auto& s : group) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const PcfSolution& x, const PcfSolution& y) {
    return std::make_tuple(x.a.real(), x.a.imag(), x.v.real(), x.v.imag()) <
           std::make_tuple(y.a.real(), y.a.imag(), y.v.real(), y.v.imag());
  });
  return out;
}

}  // namespace msw
