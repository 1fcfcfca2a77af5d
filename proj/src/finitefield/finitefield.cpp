#include "misiurewicz/finitefield.hpp"

#include <limits>

#include "misiurewicz/intfactor.hpp"

namespace msw {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime_u64(p)) {
    throw InvalidArgument("field characteristic must be a prime below 2^32, got " + std::to_string(p));
  }
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw InvalidArgument("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

PrimeField::Elem PrimeField::from_int(long v) const {
  const long m = static_cast<long>(p_);
  long r = v % m;
  return static_cast<Elem>(r < 0 ? r + m : r);
}

PrimeField::Elem PrimeField::from_mpz(const mpz_class& v) const {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
}

// ---- ExtField ----------------------------------------------------------------

ExtField::ExtField(const PrimeField& base, std::vector<std::uint64_t> modulus) {
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw InvalidArgument("extension modulus must be monic of degree >= 1");
  }
  std::vector<PrimeField::Elem> c;
  for (auto x : modulus) c.push_back(x % base.characteristic());
  if (!is_irreducible(FieldPoly<PrimeField>(base, c, "t"))) {
    throw InvalidArgument("extension modulus is reducible");
  }
  impl_ = std::make_shared<const Impl>(Impl{base, static_cast<unsigned>(c.size() - 1), std::move(c)});
}

ExtField ExtField::create(const PrimeField& base, unsigned k) {
  if (k == 0) throw InvalidArgument("extension degree must be >= 1");
  const std::uint64_t p = base.characteristic();
  std::vector<std::uint64_t> m(k + 1, 0);
  m[k] = 1;
  // Counting over (a_{k-1}, ..., a_0) in base p makes a_0 the fastest digit.
  for (;;) {
    if (is_irreducible(FieldPoly<PrimeField>(base, m, "t"))) {
      return ExtField(std::make_shared<const Impl>(Impl{base, k, m}));
    }
    std::size_t i = 0;
    while (i < k && ++m[i] == p) m[i++] = 0;
    if (i == k) break;
  }
  throw InvalidArgument("no irreducible polynomial found");  // unreachable for prime p
}

mpz_class ExtField::order() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(characteristic()), degree());
  return q;
}

std::uint64_t ExtField::size() const {
  const mpz_class q = order();
  if (mpz_sizeinbase(q.get_mpz_t(), 2) > 63) throw InvalidArgument("field too large to enumerate");
  return static_cast<std::uint64_t>(q.get_ui());
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base().add(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base().sub(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base().neg(a[i]);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  const PrimeField& f = base();
  const unsigned k = degree();
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  }
  const auto& m = modulus();
  for (std::size_t i = prod.size(); i-- > k;) {
    const std::uint64_t t = prod[i];
    if (t == 0) continue;
    for (unsigned j = 0; j <= k; ++j) prod[i - k + j] = f.sub(prod[i - k + j], f.mul(t, m[j]));
  }
  prod.resize(k);
  return prod;
}

ExtField::Elem ExtField::pow(const Elem& a, const mpz_class& e) const {
  Elem r = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw InvalidArgument("inverse of zero in extension field");
  return pow(a, order() - 2);
}

ExtField::Elem ExtField::from_int(long v) const { return from_base(base().from_int(v)); }

ExtField::Elem ExtField::from_mpz(const mpz_class& v) const { return from_base(base().from_mpz(v)); }

ExtField::Elem ExtField::from_base(std::uint64_t v) const {
  Elem e = zero();
  e[0] = v % characteristic();
  return e;
}

ExtField::Elem ExtField::frobenius(const Elem& a) const {
  return pow(a, mpz_class(static_cast<unsigned long>(characteristic())));
}

ExtField::Elem ExtField::pth_root(const Elem& a) const {
  // x -> x^p has order k on F_{p^k}, so its inverse is x -> x^(p^(k-1)).
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(characteristic()), degree() - 1);
  return pow(a, e);
}

ExtField::Elem ExtField::element(std::uint64_t index) const {
  Elem e = zero();
  const std::uint64_t p = characteristic();
  for (unsigned i = 0; i < degree(); ++i) {
    e[i] = index % p;
    index /= p;
  }
  return e;
}

ExtField::Elem ExtField::random(std::mt19937_64& rng) const {
  Elem e = zero();
  for (auto& x : e) x = rng() % characteristic();
  return e;
}

unsigned ExtField::degree_of(const Elem& a) const {
  const unsigned k = degree();
  for (unsigned d = 1; d < k; ++d) {
    if (k % d) continue;
    Elem x = a;
    for (unsigned i = 0; i < d; ++i) x = frobenius(x);
    if (x == a) return d;
  }
  return k;
}

std::string ExtField::to_text(const Elem& a) const {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s + "]";
}

// ---- Helpers on F_p polynomials ------------------------------------------------

FieldPoly<ExtField> embed(const FieldPoly<PrimeField>& f, const ExtField& ext) {
  if (f.field().characteristic() != ext.characteristic()) {
    throw InvalidArgument("embedding between fields of different characteristic");
  }
  std::vector<ExtField::Elem> c;
  for (auto x : f.coeffs()) c.push_back(ext.from_base(x));
  return FieldPoly<ExtField>(ext, std::move(c), f.var());
}

std::vector<std::pair<PrimeField::Elem, unsigned>> roots_in_field(const FieldPoly<PrimeField>& f,
                                                                  const PrimeField& target) {
  if (!(f.field() == target)) throw InvalidArgument("polynomial is not over the target field");
  return roots(f);
}

std::vector<std::pair<ExtField::Elem, unsigned>> roots_in_field(const FieldPoly<PrimeField>& f,
                                                                const ExtField& target) {
  return roots(embed(f, target));
}

bool is_squarefree_mod(const IntPoly& p, std::uint64_t prime) {
  if (p.degree() < 0) throw InvalidArgument("squarefree test of the zero polynomial");
  const PrimeField field(prime);
  if (field.from_mpz(p.leading()) == 0) {
    throw InvalidArgument("prime " + std::to_string(prime) + " divides the leading coefficient");
  }
  const FieldPoly<PrimeField> f = reduce(p, field);
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace msw
