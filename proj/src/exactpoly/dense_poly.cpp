#include "misiurewicz/dense_poly.hpp"

#include <algorithm>
#include <cmath>

namespace msw {
namespace detail {

bool coeff_divexact(const mpz_class& num, const mpz_class& den, mpz_class& q) {
  if (sgn(den) == 0) throw InvalidArgument("division by zero coefficient");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return true;
}

bool coeff_divexact(const IntPoly& num, const IntPoly& den, IntPoly& q) {
  return try_exact_div(num, den, q);
}

IntPoly scale_int(const IntPoly& c, const mpz_class& k) { return c.scaled(k); }

std::string merge_tags(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty() || a == b) return a;
  throw VariableMismatch("polynomials in '" + a + "' and '" + b + "' cannot be combined");
}

namespace {

constexpr std::size_t kKroneckerThreshold = 24;

std::size_t max_bits(const std::vector<mpz_class>& v) {
  std::size_t bits = 1;
  for (const auto& c : v) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < n) ++r;
  return r;
}

mpz_class pack(const std::vector<mpz_class>& v, std::size_t slot) {
  mpz_class x = 0;
  for (std::size_t i = v.size(); i-- > 0;) {
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), slot);
    x += v[i];
  }
  return x;
}

// Reads `count` signed slots back out of x; each slot holds a value in
// (-2^(slot-1), 2^(slot-1)].
std::vector<mpz_class> unpack(mpz_class x, std::size_t slot, std::size_t count) {
  std::vector<mpz_class> out(count);
  mpz_class half = 1;
  mpz_mul_2exp(half.get_mpz_t(), half.get_mpz_t(), slot - 1);
  mpz_class full = half * 2;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), slot);
    if (r > half) r -= full;
    x -= r;
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), slot);
    out[i] = std::move(r);
  }
  return out;
}

}  // namespace

std::vector<mpz_class> multiply_schoolbook(const std::vector<mpz_class>& a,
                                           const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::vector<mpz_class> multiply_kronecker(const std::vector<mpz_class>& a,
                                          const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  // Each product coefficient is a sum of at most min(|a|,|b|) terms bounded by
  // 2^(bits_a + bits_b), plus one sign bit and one guard bit.
  const std::size_t slot =
      max_bits(a) + max_bits(b) + ceil_log2(std::min(a.size(), b.size())) + 2;
  mpz_class prod = pack(a, slot) * pack(b, slot);
  return unpack(std::move(prod), slot, a.size() + b.size() - 1);
}

std::vector<mpz_class> multiply_coeffs(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b) {
  if (std::min(a.size(), b.size()) >= kKroneckerThreshold) return multiply_kronecker(a, b);
  return multiply_schoolbook(a, b);
}

std::vector<IntPoly> multiply_coeffs(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<IntPoly> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace detail

long double to_long_double(const mpz_class& z) {
  const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  mpz_class top = abs(z);
  long exp2 = 0;
  if (bits > 64) {
    exp2 = static_cast<long>(bits - 64);
    mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), static_cast<mp_bitcnt_t>(exp2));
  }
  // top < 2^64 now; assemble it from two 32-bit halves.
  mpz_class hi;
  mpz_tdiv_q_2exp(hi.get_mpz_t(), top.get_mpz_t(), 32);
  mpz_class lo = top - (hi << 32);
  long double v = static_cast<long double>(hi.get_ui()) * 4294967296.0L + static_cast<long double>(lo.get_ui());
  v = std::ldexp(v, static_cast<int>(exp2));
  return sgn(z) < 0 ? -v : v;
}

mpz_class evaluate(const IntPoly& p, const mpz_class& x) {
  return p.evaluate_with(x, [](const mpz_class& c) { return c; });
}

std::complex<long double> evaluate(const IntPoly& p, const std::complex<long double>& x) {
  return p.evaluate_with(x, [](const mpz_class& c) {
    return std::complex<long double>(to_long_double(c), 0.0L);
  });
}

IntPoly compose(const IntPoly& p, const IntPoly& q) {
  const std::string var = q.var().empty() ? p.var() : q.var();
  IntPoly r = p.evaluate_with(q.with_var(var), [&](const mpz_class& c) { return IntPoly(c, var); });
  return r.with_var(var);
}

IntPoly evaluate_inner(const BiPoly& p, const mpz_class& a) {
  std::vector<mpz_class> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(evaluate(c, a));
  return IntPoly(std::move(out), p.var());
}

IntPoly evaluate_outer(const BiPoly& p, const mpz_class& v) {
  std::string inner;
  for (const auto& c : p.coeffs()) inner = detail::merge_tags(inner, c.var());
  IntPoly r = p.evaluate_with(IntPoly(v, inner), [](const IntPoly& c) { return c; });
  return r.with_var(inner);
}

std::complex<long double> evaluate(const BiPoly& p, const std::complex<long double>& inner,
                                   const std::complex<long double>& outer) {
  return p.evaluate_with(outer, [&](const IntPoly& c) { return evaluate(c, inner); });
}

BiPoly derivative_inner(const BiPoly& p) {
  std::vector<IntPoly> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(c.derivative());
  return BiPoly(std::move(out), p.var());
}

BiPoly lift_inner(const IntPoly& p, std::string outer_var) { return BiPoly(p, std::move(outer_var)); }

std::vector<std::complex<long double>> specialize_inner(const BiPoly& p,
                                                        const std::complex<long double>& inner) {
  std::vector<std::complex<long double>> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(evaluate(c, inner));
  return out;
}

int total_degree(const BiPoly& p) {
  int best = kZeroDegree;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p.coeffs()[i];
    if (!c.is_zero()) best = std::max(best, static_cast<int>(i) + c.degree());
  }
  return best;
}

}  // namespace msw
