#pragma once

// Arithmetic in F_p and F_{p^k}, polynomials over them, and factorization:
// squarefree decomposition (with p-th roots), distinct-degree splitting and
// Cantor-Zassenhaus equal-degree splitting.
//
// Fields are small value types; elements are plain values interpreted by the
// field that made them. All algorithms are templates over a field type F that
// provides the PrimeField/ExtField interface below.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "misiurewicz/dense_poly.hpp"
#include "misiurewicz/error.hpp"

namespace msw {

// F_p for a prime p < 2^32.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  // Throws InvalidArgument unless p is prime and below 2^32.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return 1; }
  // q = p.
  mpz_class order() const { return mpz_class(static_cast<unsigned long>(p_)); }
  std::uint64_t size() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
  Elem from_int(long v) const;
  Elem from_mpz(const mpz_class& v) const;
  // a^p.
  Elem frobenius(Elem a) const { return a; }
  Elem pth_root(Elem a) const { return a; }
  // Enumerates the field: element(i) for i in [0, size()).
  Elem element(std::uint64_t index) const { return index % p_; }
  Elem random(std::mt19937_64& rng) const { return rng() % p_; }
  // Degree over F_p of the smallest subfield containing a.
  unsigned degree_of(Elem) const { return 1; }
  std::string to_text(Elem a) const { return std::to_string(a); }
  // Total order on elements, for deterministic output.
  bool less(Elem a, Elem b) const { return a < b; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

// F_{p^k} = F_p[t]/(modulus), elements as coefficient vectors of length k.
class ExtField {
 public:
  using Elem = std::vector<std::uint64_t>;

  // Uses the lexicographically least monic irreducible of degree k, ordering
  // candidates by (a_{k-1}, ..., a_0) as base-p digits.
  static ExtField create(const PrimeField& base, unsigned k);
  // Throws InvalidArgument unless `modulus` (low to high, monic) is irreducible.
  ExtField(const PrimeField& base, std::vector<std::uint64_t> modulus);

  const PrimeField& base() const { return impl_->base; }
  std::uint64_t characteristic() const { return impl_->base.characteristic(); }
  unsigned degree() const { return impl_->k; }
  const std::vector<std::uint64_t>& modulus() const { return impl_->modulus; }
  mpz_class order() const;
  // q = p^k; throws if it does not fit in 64 bits.
  std::uint64_t size() const;

  Elem zero() const { return Elem(impl_->k, 0); }
  Elem one() const {
    Elem e(impl_->k, 0);
    e[0] = 1;
    return e;
  }
  bool is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t x) { return x == 0; });
  }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, const mpz_class& e) const;
  Elem pow(const Elem& a, std::uint64_t e) const { return pow(a, mpz_class(static_cast<unsigned long>(e))); }
  Elem inv(const Elem& a) const;
  Elem from_int(long v) const;
  Elem from_mpz(const mpz_class& v) const;
  Elem from_base(std::uint64_t v) const;
  Elem frobenius(const Elem& a) const;
  Elem pth_root(const Elem& a) const;
  Elem element(std::uint64_t index) const;
  Elem random(std::mt19937_64& rng) const;
  unsigned degree_of(const Elem& a) const;
  // "[a0,a1,...]" in the power basis of the modulus.
  std::string to_text(const Elem& a) const;
  bool less(const Elem& a, const Elem& b) const {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  }

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.impl_ == b.impl_ || (a.base() == b.base() && a.modulus() == b.modulus());
  }

 private:
  struct Impl {
    PrimeField base;
    unsigned k;
    std::vector<std::uint64_t> modulus;  // monic, length k + 1
  };
  explicit ExtField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// ---- Polynomials over a field ----------------------------------------------

template <typename F>
class FieldPoly {
 public:
  using Elem = typename F::Elem;

  explicit FieldPoly(F field, std::string var = "c") : field_(std::move(field)), var_(std::move(var)) {}
  FieldPoly(F field, std::vector<Elem> coeffs, std::string var = "c")
      : field_(std::move(field)), c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }
  static FieldPoly constant(const F& field, Elem c, std::string var = "c") {
    return FieldPoly(field, std::vector<Elem>{std::move(c)}, std::move(var));
  }
  static FieldPoly x(const F& field, std::string var = "c") {
    return FieldPoly(field, std::vector<Elem>{field.zero(), field.one()}, std::move(var));
  }

  const F& field() const { return field_; }
  const std::string& var() const { return var_; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && field_.equal(c_[0], field_.one()); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  const Elem& leading() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return c_.back();
  }

  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
    const F& f = a.field_;
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(i), b.coeff(i));
    return FieldPoly(f, std::move(r), a.var_);
  }
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
    const F& f = a.field_;
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(i), b.coeff(i));
    return FieldPoly(f, std::move(r), a.var_);
  }
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    const F& f = a.field_;
    if (a.is_zero() || b.is_zero()) return FieldPoly(f, a.var_);
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return FieldPoly(f, std::move(r), a.var_);
  }
  friend bool operator==(const FieldPoly& a, const FieldPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const FieldPoly& a, const FieldPoly& b) { return !(a == b); }

  FieldPoly scaled(const Elem& k) const {
    std::vector<Elem> r = c_;
    for (auto& x : r) x = field_.mul(x, k);
    return FieldPoly(field_, std::move(r), var_);
  }
  FieldPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
  }
  FieldPoly derivative() const {
    if (c_.size() <= 1) return FieldPoly(field_, var_);
    std::vector<Elem> r(c_.size() - 1, field_.zero());
    for (std::size_t i = 1; i < c_.size(); ++i) {
      r[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<long>(i % field_.characteristic())));
    }
    return FieldPoly(field_, std::move(r), var_);
  }
  Elem evaluate(const Elem& x) const {
    Elem acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
  }

  // Quotient and remainder.
  std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& b) const {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    if (degree() < b.degree()) return {FieldPoly(field_, var_), *this};
    std::vector<Elem> r = c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<Elem> q(c_.size() - db, field_.zero());
    const Elem inv_lc = field_.inv(b.leading());
    for (std::size_t i = q.size(); i-- > 0;) {
      const Elem t = field_.mul(r[i + db], inv_lc);
      q[i] = t;
      if (field_.is_zero(t)) continue;
      for (std::size_t j = 0; j <= db; ++j) r[i + j] = field_.sub(r[i + j], field_.mul(t, b.c_[j]));
    }
    r.resize(db);
    return {FieldPoly(field_, std::move(q), var_), FieldPoly(field_, std::move(r), var_)};
  }
  FieldPoly operator%(const FieldPoly& b) const { return divmod(b).second; }
  FieldPoly operator/(const FieldPoly& b) const { return divmod(b).first; }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Elem> c_;
  std::string var_;
};

// Monic GCD (zero only when both inputs are zero).
template <typename F>
FieldPoly<F> gcd(FieldPoly<F> a, FieldPoly<F> b) {
  while (!b.is_zero()) {
    FieldPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// base^e mod m.
template <typename F>
FieldPoly<F> powmod(const FieldPoly<F>& base, const mpz_class& e, const FieldPoly<F>& m) {
  FieldPoly<F> result = FieldPoly<F>::constant(base.field(), base.field().one(), base.var()) % m;
  FieldPoly<F> b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

template <typename F>
FieldPoly<F> pow(const FieldPoly<F>& base, unsigned e) {
  FieldPoly<F> r = FieldPoly<F>::constant(base.field(), base.field().one(), base.var());
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

// Coefficientwise reduction of an integer polynomial into F.
template <typename F>
FieldPoly<F> reduce(const IntPoly& p, const F& field) {
  std::vector<typename F::Elem> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.push_back(field.from_mpz(x));
  return FieldPoly<F>(field, std::move(c), p.var().empty() ? "c" : p.var());
}

inline FieldPoly<PrimeField> reduce_mod_p(const IntPoly& p, std::uint64_t prime) {
  return reduce(p, PrimeField(prime));
}

// ---- Factorization -----------------------------------------------------------

template <typename F>
struct FieldFactor {
  FieldPoly<F> factor;  // monic irreducible
  unsigned multiplicity;
};

template <typename F>
struct FieldFactorization {
  typename F::Elem unit;
  std::vector<FieldFactor<F>> factors;  // sorted by (degree, coefficients high to low)

  FieldPoly<F> product(const F& field, const std::string& var = "c") const {
    FieldPoly<F> r = FieldPoly<F>::constant(field, unit, var);
    for (const auto& f : factors) r = r * pow(f.factor, f.multiplicity);
    return r;
  }
};

namespace detail {

// f^(1/p) for f whose exponents are all multiples of p.
template <typename F>
FieldPoly<F> pth_root_poly(const FieldPoly<F>& f) {
  const F& field = f.field();
  const std::uint64_t p = field.characteristic();
  std::vector<typename F::Elem> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(field.pth_root(f.coeffs()[i]));
  return FieldPoly<F>(field, std::move(r), f.var());
}

template <typename F>
void squarefree_rec(const FieldPoly<F>& f, unsigned scale, std::vector<FieldFactor<F>>& out) {
  if (f.degree() < 1) return;
  FieldPoly<F> d = f.derivative();
  if (d.is_zero()) {
    squarefree_rec(pth_root_poly(f), scale * static_cast<unsigned>(f.field().characteristic()), out);
    return;
  }
  FieldPoly<F> c = gcd(f, d);
  FieldPoly<F> w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    FieldPoly<F> y = gcd(w, c);
    FieldPoly<F> fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    squarefree_rec(pth_root_poly(c), scale * static_cast<unsigned>(f.field().characteristic()), out);
  }
}

template <typename F>
bool factor_less(const FieldPoly<F>& a, const FieldPoly<F>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const F& field = a.field();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (!field.equal(a.coeffs()[i], b.coeffs()[i])) return field.less(a.coeffs()[i], b.coeffs()[i]);
  }
  return false;
}

// Trace-like splitting polynomial for characteristic 2:
// a + a^2 + a^4 + ... + a^(2^(k*d - 1)) mod g, with q = 2^k.
template <typename F>
FieldPoly<F> trace_map(const FieldPoly<F>& a, unsigned steps, const FieldPoly<F>& g) {
  FieldPoly<F> t = a % g;
  FieldPoly<F> cur = t;
  for (unsigned i = 1; i < steps; ++i) {
    cur = (cur * cur) % g;
    t = t + cur;
  }
  return t;
}

template <typename F>
FieldPoly<F> random_poly_below(const FieldPoly<F>& g, std::mt19937_64& rng) {
  std::vector<typename F::Elem> c;
  const int n = g.degree();
  for (int i = 0; i < n; ++i) c.push_back(g.field().random(rng));
  return FieldPoly<F>(g.field(), std::move(c), g.var());
}

// Splits a monic squarefree g whose irreducible factors all have degree d.
template <typename F>
void equal_degree_split(const FieldPoly<F>& g, int d, std::mt19937_64& rng, std::vector<FieldPoly<F>>& out) {
  if (g.degree() <= d) {
    if (g.degree() > 0) out.push_back(g.monic());
    return;
  }
  const F& field = g.field();
  const mpz_class q = field.order();
  const bool even = q % 2 == 0;
  for (;;) {
    FieldPoly<F> a = random_poly_below(g, rng);
    if (a.degree() < 1) continue;
    FieldPoly<F> b(field, g.var());
    if (even) {
      b = trace_map(a, field.degree() * static_cast<unsigned>(d), g);
    } else {
      mpz_class qd;
      mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
      const mpz_class e = (qd - 1) / 2;
      b = powmod(a, e, g) - FieldPoly<F>::constant(field, field.one(), g.var());
    }
    FieldPoly<F> h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split((g / h).monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Squarefree decomposition of a nonzero polynomial: monic squarefree parts
// with multiplicities (multiplicities may repeat across parts in char p).
template <typename F>
std::vector<FieldFactor<F>> squarefree_decomposition(const FieldPoly<F>& f) {
  std::vector<FieldFactor<F>> out;
  detail::squarefree_rec(f.monic(), 1, out);
  return out;
}

// Distinct-degree splitting of a monic squarefree polynomial: pairs
// (product of all irreducible factors of degree d, d).
template <typename F>
std::vector<std::pair<FieldPoly<F>, int>> distinct_degree_split(const FieldPoly<F>& f) {
  std::vector<std::pair<FieldPoly<F>, int>> out;
  const F& field = f.field();
  const mpz_class q = field.order();
  FieldPoly<F> rest = f.monic();
  const FieldPoly<F> x = FieldPoly<F>::x(field, f.var());
  FieldPoly<F> h = x % rest;
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = powmod(h, q, rest);
    FieldPoly<F> g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

// Rabin's irreducibility test.
template <typename F>
bool is_irreducible(const FieldPoly<F>& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const F& field = f.field();
  const mpz_class q = field.order();
  const FieldPoly<F> g = f.monic();
  const FieldPoly<F> x = FieldPoly<F>::x(field, f.var());
  // x^(q^n) == x mod g
  FieldPoly<F> h = x % g;
  std::vector<FieldPoly<F>> frob(static_cast<std::size_t>(n) + 1, h);
  for (int i = 1; i <= n; ++i) {
    h = powmod(h, q, g);
    frob[static_cast<std::size_t>(i)] = h;
  }
  if (frob[static_cast<std::size_t>(n)] != (x % g)) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r) continue;
    while (m % r == 0) m /= r;
    if (gcd(frob[static_cast<std::size_t>(n / r)] - x, g).degree() > 0) return false;
  }
  return true;
}

// Complete factorization into monic irreducibles: squarefree decomposition,
// distinct-degree, then randomized equal-degree splitting. Deterministic for a
// fixed seed.
template <typename F>
FieldFactorization<F> factor_mod(const FieldPoly<F>& f, std::uint64_t seed = 0x5eedULL) {
  if (f.is_zero()) throw InvalidArgument("factor_mod of the zero polynomial");
  const F& field = f.field();
  FieldFactorization<F> out{f.leading(), {}};
  std::mt19937_64 rng(seed);
  for (const auto& part : squarefree_decomposition(f)) {
    for (const auto& [g, d] : distinct_degree_split(part.factor)) {
      std::vector<FieldPoly<F>> pieces;
      detail::equal_degree_split(g, d, rng, pieces);
      for (auto& p : pieces) out.factors.push_back({std::move(p), part.multiplicity});
    }
  }
  // Merge equal factors reported from different squarefree parts.
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FieldFactor<F>& a, const FieldFactor<F>& b) { return detail::factor_less(a.factor, b.factor); });
  std::vector<FieldFactor<F>> merged;
  for (auto& fac : out.factors) {
    if (!merged.empty() && merged.back().factor == fac.factor) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  out.factors = std::move(merged);
  (void)field;
  return out;
}

// Roots lying in the polynomial's own field, with multiplicities, in the
// field's element order.
template <typename F>
std::vector<std::pair<typename F::Elem, unsigned>> roots(const FieldPoly<F>& f, std::uint64_t seed = 0x5eedULL) {
  std::vector<std::pair<typename F::Elem, unsigned>> out;
  if (f.is_zero()) throw InvalidArgument("roots of the zero polynomial");
  const F& field = f.field();
  for (const auto& fac : factor_mod(f, seed).factors) {
    if (fac.factor.degree() == 1) out.emplace_back(field.neg(fac.factor.coeffs()[0]), fac.multiplicity);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return field.less(a.first, b.first); });
  return out;
}

// Maps a polynomial over F_p into an extension of the same characteristic.
FieldPoly<ExtField> embed(const FieldPoly<PrimeField>& f, const ExtField& ext);

// Roots of an F_p polynomial in F_p (target = base) or in F_{p^k}.
std::vector<std::pair<PrimeField::Elem, unsigned>> roots_in_field(const FieldPoly<PrimeField>& f,
                                                                  const PrimeField& target);
std::vector<std::pair<ExtField::Elem, unsigned>> roots_in_field(const FieldPoly<PrimeField>& f,
                                                                const ExtField& target);

// Squarefree test mod p: true iff gcd(P mod p, P' mod p) is constant. Throws
// InvalidArgument when p divides lc(P), since the degree drop breaks the test.
bool is_squarefree_mod(const IntPoly& p, std::uint64_t prime);

// "p^k; unit; [(factor, mult), ...]" with factors in canonical poly text.
template <typename F>
std::string to_text(const FieldPoly<F>& f) {
  std::string s = "poly(" + f.var() + ")=[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) s += ',';
    s += f.field().to_text(f.coeffs()[i]);
  }
  return s + "]";
}

template <typename F>
std::string to_text(const FieldFactorization<F>& fac, const F& field) {
  std::string s = std::to_string(field.characteristic()) + "^" + std::to_string(field.degree()) + "; " +
                  field.to_text(fac.unit) + "; [";
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    if (i) s += ", ";
    s += "(" + to_text(fac.factors[i].factor) + ", " + std::to_string(fac.factors[i].multiplicity) + ")";
  }
  return s + "]";
}

}  // namespace msw
