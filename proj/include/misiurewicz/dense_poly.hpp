#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// IntPoly = DensePoly<mpz_class> is a polynomial in one variable over Z.
// BiPoly = DensePoly<IntPoly> is recursive-dense: a polynomial in an outer
// variable (v) whose coefficients are IntPolys in an inner variable (a).
//
// Coefficients are stored low-to-high and kept trimmed, so the leading
// coefficient is nonzero unless the polynomial is zero. The zero polynomial
// has degree kZeroDegree.
//
// Every polynomial carries a variable tag. An empty tag marks a constant built
// without a name; it is compatible with any tag. Two different non-empty tags
// in one operation raise VariableMismatch.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "misiurewicz/error.hpp"

namespace msw {

inline constexpr int kZeroDegree = -1;

template <typename Coeff>
class DensePoly;

using IntPoly = DensePoly<mpz_class>;
using BiPoly = DensePoly<IntPoly>;

namespace detail {

inline bool coeff_is_zero(const mpz_class& c) { return sgn(c) == 0; }
template <typename C>
bool coeff_is_zero(const DensePoly<C>& c) { return c.is_zero(); }

// q = num / den when the division is exact in the coefficient ring.
bool coeff_divexact(const mpz_class& num, const mpz_class& den, mpz_class& q);
bool coeff_divexact(const IntPoly& num, const IntPoly& den, IntPoly& q);

inline mpz_class scale_int(const mpz_class& c, const mpz_class& k) { return c * k; }
IntPoly scale_int(const IntPoly& c, const mpz_class& k);

// Raises VariableMismatch when both tags are set and differ.
std::string merge_tags(const std::string& a, const std::string& b);

// Product of two trimmed coefficient vectors. The integer overload switches to
// Kronecker substitution for large operands.
std::vector<mpz_class> multiply_coeffs(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b);
std::vector<mpz_class> multiply_schoolbook(const std::vector<mpz_class>& a,
                                           const std::vector<mpz_class>& b);
std::vector<mpz_class> multiply_kronecker(const std::vector<mpz_class>& a,
                                          const std::vector<mpz_class>& b);
std::vector<IntPoly> multiply_coeffs(const std::vector<IntPoly>& a,
                                     const std::vector<IntPoly>& b);

}  // namespace detail

template <typename Coeff>
class DensePoly {
 public:
  using coeff_type = Coeff;

  DensePoly() = default;
  explicit DensePoly(std::vector<Coeff> coeffs, std::string var = {})
      : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }
  // Constant polynomial.
  explicit DensePoly(Coeff constant, std::string var = {}) : var_(std::move(var)) {
    if (!detail::coeff_is_zero(constant)) coeffs_.push_back(std::move(constant));
  }
  DensePoly(long constant) : DensePoly(Coeff(constant)) {}  // NOLINT: integers promote

  static DensePoly monomial(Coeff c, std::size_t degree, std::string var) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = std::move(c);
    return DensePoly(std::move(v), std::move(var));
  }
  // The main variable itself.
  static DensePoly variable(std::string var) { return monomial(Coeff(1), 1, std::move(var)); }

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::size_t size() const { return coeffs_.size(); }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero beyond the degree.
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(); }
  const Coeff& leading() const {
    if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  Coeff constant_term() const { return coeff(0); }

  const std::string& var() const { return var_; }
  DensePoly with_var(std::string var) const {
    DensePoly r = *this;
    r.var_ = std::move(var);
    return r;
  }

  DensePoly& operator+=(const DensePoly& o) {
    var_ = detail::merge_tags(var_, o.var_);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    var_ = detail::merge_tags(var_, o.var_);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const DensePoly& o) {
    *this = *this * o;
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator-(DensePoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    std::string var = detail::merge_tags(a.var_, b.var_);
    if (a.is_zero() || b.is_zero()) return DensePoly(std::vector<Coeff>{}, var);
    return DensePoly(detail::multiply_coeffs(a.coeffs_, b.coeffs_), std::move(var));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  // Multiplies every coefficient by a coefficient-ring element.
  DensePoly scaled(const Coeff& k) const {
    if (detail::coeff_is_zero(k)) return DensePoly(std::vector<Coeff>{}, var_);
    DensePoly r = *this;
    for (auto& c : r.coeffs_) c *= k;
    r.trim();
    return r;
  }
  DensePoly scaled_int(const mpz_class& k) const {
    DensePoly r = *this;
    for (auto& c : r.coeffs_) c = detail::scale_int(c, k);
    r.trim();
    return r;
  }
  // Exact division of every coefficient; throws NotDivisible otherwise.
  DensePoly divexact_coeff(const Coeff& k) const {
    DensePoly r = *this;
    for (auto& c : r.coeffs_) {
      Coeff q;
      if (!detail::coeff_divexact(c, k, q)) throw NotDivisible("coefficient not divisible by scalar");
      c = std::move(q);
    }
    return r;
  }
  // Multiplication by x^k.
  DensePoly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    DensePoly r = *this;
    r.coeffs_.insert(r.coeffs_.begin(), k, Coeff());
    return r;
  }

  // Formal derivative in the main variable.
  DensePoly derivative() const {
    if (coeffs_.size() <= 1) return DensePoly(std::vector<Coeff>{}, var_);
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      d[i - 1] = detail::scale_int(coeffs_[i], mpz_class(static_cast<unsigned long>(i)));
    }
    return DensePoly(std::move(d), var_);
  }

  // Horner evaluation at a point of any ring that accepts Coeff via `lift`.
  template <typename T, typename Lift>
  T evaluate_with(const T& x, Lift lift) const {
    if (coeffs_.empty()) return lift(Coeff());
    T acc = lift(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + lift(coeffs_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
  std::string var_;
};

template <typename C>
DensePoly<C> pow(const DensePoly<C>& base, unsigned long e) {
  DensePoly<C> result(C(1), base.var());
  DensePoly<C> b = base;
  while (e > 0) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

// Division that succeeds only when q divides p exactly in the coefficient
// ring; returns false on any nonzero remainder or inexact leading division.
template <typename C>
bool try_exact_div(const DensePoly<C>& p, const DensePoly<C>& q, DensePoly<C>& out) {
  std::string var = detail::merge_tags(p.var(), q.var());
  if (q.is_zero()) throw InvalidArgument("exact_div by the zero polynomial");
  if (p.is_zero()) {
    out = DensePoly<C>(std::vector<C>{}, var);
    return true;
  }
  const int dp = p.degree();
  const int dq = q.degree();
  if (dp < dq) return false;
  std::vector<C> rem = p.coeffs();
  const auto& qc = q.coeffs();
  const C& lc = q.leading();
  std::vector<C> quot(static_cast<std::size_t>(dp - dq + 1));
  for (int i = dp - dq; i >= 0; --i) {
    C& top = rem[static_cast<std::size_t>(i + dq)];
    if (detail::coeff_is_zero(top)) continue;
    C t;
    if (!detail::coeff_divexact(top, lc, t)) return false;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(i + j)] -= t * qc[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(i)] = std::move(t);
  }
  for (int i = 0; i < dq; ++i) {
    if (!detail::coeff_is_zero(rem[static_cast<std::size_t>(i)])) return false;
  }
  out = DensePoly<C>(std::move(quot), std::move(var));
  return true;
}

// Quotient of an exact division. Throws NotDivisible when q does not divide p.
template <typename C>
DensePoly<C> exact_div(const DensePoly<C>& p, const DensePoly<C>& q) {
  DensePoly<C> out;
  if (!try_exact_div(p, q, out)) throw NotDivisible("exact_div: divisor leaves a remainder");
  return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q * b + r with deg r < deg b.
template <typename C>
DensePoly<C> pseudo_remainder(const DensePoly<C>& a, const DensePoly<C>& b) {
  std::string var = detail::merge_tags(a.var(), b.var());
  if (b.is_zero()) throw InvalidArgument("pseudo_remainder by zero");
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) return a;
  std::vector<C> r = a.coeffs();
  const auto& bc = b.coeffs();
  const C& lc = b.leading();
  for (int i = da; i >= db; --i) {
    C top = r[static_cast<std::size_t>(i)];
    for (auto& c : r) c *= lc;
    if (!detail::coeff_is_zero(top)) {
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= top * bc[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(i));
  }
  return DensePoly<C>(std::move(r), std::move(var));
}

// ---- IntPoly helpers ------------------------------------------------------

// Nearest long double (truncated to 64 significant bits).
long double to_long_double(const mpz_class& z);

mpz_class evaluate(const IntPoly& p, const mpz_class& x);
std::complex<long double> evaluate(const IntPoly& p, const std::complex<long double>& x);
// p(q): substitutes the polynomial q for the main variable of p.
IntPoly compose(const IntPoly& p, const IntPoly& q);

// ---- BiPoly helpers -------------------------------------------------------

// Substitutes a value for the inner variable; the result is an IntPoly in the outer one.
IntPoly evaluate_inner(const BiPoly& p, const mpz_class& a);
// Substitutes a value for the outer variable; the result is an IntPoly in the inner one.
IntPoly evaluate_outer(const BiPoly& p, const mpz_class& v);
std::complex<long double> evaluate(const BiPoly& p, const std::complex<long double>& inner,
                                   const std::complex<long double>& outer);
// d/d(inner variable), applied coefficientwise.
BiPoly derivative_inner(const BiPoly& p);
// Embeds an IntPoly in the inner variable as a BiPoly constant in the outer variable.
BiPoly lift_inner(const IntPoly& p, std::string outer_var);
// Substitutes a complex value for the inner variable; returns the complex
// coefficients in the outer variable, low to high.
std::vector<std::complex<long double>> specialize_inner(const BiPoly& p, const std::complex<long double>& inner);
// Total degree (inner + outer exponents).
int total_degree(const BiPoly& p);

}  // namespace msw
