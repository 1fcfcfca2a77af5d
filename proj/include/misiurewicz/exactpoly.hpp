#pragma once

// Content, GCD, resultants and discriminants over Z and Z[a], plus the
// canonical text form used by the CLI and golden files.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "misiurewicz/dense_poly.hpp"

namespace msw {

struct ContentSplit {
  mpz_class content;  // >= 0; zero only for the zero polynomial
  int sign = 0;       // sign of the leading coefficient (0 for zero)
  IntPoly primitive;  // positive leading coefficient when nonzero
};

// p = sign * content * primitive.
ContentSplit content_primitive(const IntPoly& p);

// Primitive GCD over Q with integer coefficients and positive leading
// coefficient, by the subresultant remainder sequence.
IntPoly gcd_poly(const IntPoly& p, const IntPoly& q);

namespace detail {

template <typename C>
C coeff_pow(const C& base, unsigned long e) {
  if constexpr (std::is_same_v<C, mpz_class>) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
  } else {
    return pow(base, e);
  }
}

template <typename C>
C coeff_divexact_or_throw(const C& num, const C& den) {
  C q;
  if (!coeff_divexact(num, den, q)) throw NotDivisible("subresultant step: inexact coefficient division");
  return q;
}

}  // namespace detail

// Resultant in the main variable by the subresultant PRS.
//
// Sign convention: Res(A, B) = lc(A)^deg(B) * prod B(alpha) over the roots
// alpha of A, i.e. the Sylvester-matrix determinant. With it,
// Res(A, B) = (-1)^(deg A * deg B) Res(B, A), Res(c, c+1) = 1 and
// Res_v(v - a, v + a) = 2a.
template <typename C>
C resultant(DensePoly<C> a, DensePoly<C> b) {
  detail::merge_tags(a.var(), b.var());
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("resultant of the zero polynomial");
  int s = 1;
  C t(1);
  if constexpr (std::is_same_v<C, mpz_class>) {
    auto ca = content_primitive(a);
    auto cb = content_primitive(b);
    // Content is pulled out with its sign: a = sign*cont*pp.
    const mpz_class ka = ca.content * ca.sign;
    const mpz_class kb = cb.content * cb.sign;
    t = detail::coeff_pow(ka, static_cast<unsigned long>(b.degree())) *
        detail::coeff_pow(kb, static_cast<unsigned long>(a.degree()));
    a = ca.primitive;
    b = cb.primitive;
  }
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    C r = detail::coeff_pow(b.leading(), static_cast<unsigned long>(a.degree())) * t;
    return s < 0 ? C(-r) : r;
  }
  C g(1);
  C h(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    DensePoly<C> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return C(0);
    b = r.divexact_coeff(g * detail::coeff_pow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = detail::coeff_divexact_or_throw(detail::coeff_pow(g, static_cast<unsigned long>(delta)),
                                          detail::coeff_pow(h, static_cast<unsigned long>(delta - 1)));
    }
    if (b.degree() == 0) {
      const auto da = static_cast<unsigned long>(a.degree());
      C res = detail::coeff_divexact_or_throw(detail::coeff_pow(b.leading(), da),
                                              detail::coeff_pow(h, da - 1));
      res = res * t;
      return s < 0 ? C(-res) : res;
    }
  }
}

// Disc(P) = (-1)^(n(n-1)/2) * Res(P, P') / lc(P), n = deg P >= 1.
// Under this convention Disc(c^3 + 2c^2 + c + 1) = -23 and Disc(c^2 + 1) = -4.
template <typename C>
C discriminant(const DensePoly<C>& p) {
  const int n = p.degree();
  if (n < 1) throw InvalidArgument("discriminant needs degree >= 1");
  if (n == 1) return C(1);
  C r = detail::coeff_divexact_or_throw(resultant(p, p.derivative()), p.leading());
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  return (pairs & 1) ? C(-r) : r;
}

// ---- Rational polynomials -------------------------------------------------

// numerator / denominator with denominator > 0 and
// gcd(content(numerator), denominator) = 1.
class RatPoly {
 public:
  RatPoly() : den_(1) {}
  explicit RatPoly(IntPoly num, mpz_class den = 1);

  const IntPoly& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  int degree() const { return num_.degree(); }
  bool is_zero() const { return num_.is_zero(); }
  mpq_class coeff(std::size_t i) const;
  bool is_integral() const { return den_ == 1; }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Same polynomial scaled to leading coefficient 1.
  RatPoly monic() const;

 private:
  void normalize();
  IntPoly num_;
  mpz_class den_;
};

// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// ---- Canonical text ---------------------------------------------------------

// poly(c)=[a0,a1,...], coefficients low to high. The zero polynomial is
// poly(c)=[]. An untagged polynomial prints with variable x.
std::string to_text(const IntPoly& p);
// poly(a,v)=[[...],[...],...]: outer list indexed by the degree in v, each
// inner list the IntPoly coefficient in a.
std::string to_text(const BiPoly& p);
// Parses the univariate form; throws ParseError.
IntPoly parse_int_poly(std::string_view text);
// Human-readable form, e.g. c^3 + 2*c^2 + c + 1.
std::string to_pretty(const IntPoly& p);

}  // namespace msw
