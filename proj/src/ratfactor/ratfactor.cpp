#include "misiurewicz/ratfactor.hpp"

#include <algorithm>
#include <sstream>

#include "misiurewicz/error.hpp"
#include "misiurewicz/exactpoly.hpp"
#include "misiurewicz/finitefield.hpp"
#include "misiurewicz/intfactor.hpp"

namespace msw {

namespace {

constexpr int kPrimeTrials = 5;
constexpr int kModularIrreducibilityTrials = 12;

// Coefficients reduced into [0, m).
IntPoly mod_poly(const IntPoly& p, const mpz_class& m) {
  std::vector<mpz_class> c = p.coeffs();
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c), p.var());
}

// Coefficients reduced into (-m/2, m/2].
IntPoly symmetric_mod(const IntPoly& p, const mpz_class& m) {
  std::vector<mpz_class> c = p.coeffs();
  const mpz_class half = m / 2;
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  return IntPoly(std::move(c), p.var());
}

// Division with remainder by a monic polynomial, over Z.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& h) {
  const int dh = h.degree();
  if (a.degree() < dh) return {IntPoly(std::vector<mpz_class>{}, a.var()), a};
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(r.size() - static_cast<std::size_t>(dh));
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = r[i + static_cast<std::size_t>(dh)];
    if (sgn(q[i]) == 0) continue;
    for (int j = 0; j <= dh; ++j) r[i + static_cast<std::size_t>(j)] -= q[i] * h.coeff(static_cast<std::size_t>(j));
  }
  r.resize(static_cast<std::size_t>(dh));
  return {IntPoly(std::move(q), a.var()), IntPoly(std::move(r), a.var())};
}

FieldPoly<PrimeField> to_field(const IntPoly& p, const PrimeField& f) { return reduce(p, f); }

IntPoly from_field(const FieldPoly<PrimeField>& p, const std::string& var) {
  std::vector<mpz_class> c;
  for (auto x : p.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c), var);
}

// s, t with s*g + t*h = 1 over F_p; g and h coprime.
std::pair<FieldPoly<PrimeField>, FieldPoly<PrimeField>> xgcd(const FieldPoly<PrimeField>& g,
                                                              const FieldPoly<PrimeField>& h) {
  const PrimeField& f = g.field();
  FieldPoly<PrimeField> r0 = g, r1 = h;
  FieldPoly<PrimeField> s0 = FieldPoly<PrimeField>::constant(f, 1, g.var()), s1(f, g.var());
  FieldPoly<PrimeField> t0(f, g.var()), t1 = FieldPoly<PrimeField>::constant(f, 1, g.var());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FieldPoly<PrimeField> s2 = s0 - q * s1;
    FieldPoly<PrimeField> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw Error(ErrorCode::kInternal, "Hensel lifting: factors not coprime mod p");
  const auto inv = f.inv(r0.leading());
  return {s0.scaled(inv), t0.scaled(inv)};
}

// Quadratic Hensel lifting of a monic f = g*h from mod p to mod `modulus`,
// with g, h monic.
std::pair<IntPoly, IntPoly> lift_pair(const IntPoly& f, IntPoly g, IntPoly h, const mpz_class& prime,
                                      const mpz_class& modulus) {
  const PrimeField field(prime.get_ui());
  auto [sf, tf] = xgcd(to_field(g, field), to_field(h, field));
  IntPoly s = from_field(sf, f.var());
  IntPoly t = from_field(tf, f.var());
  mpz_class m = prime;
  while (m < modulus) {
    const mpz_class m2 = m * m;
    const IntPoly e = mod_poly(f - g * h, m2);
    auto [q, r] = divmod_monic(mod_poly(s * e, m2), h);
    const IntPoly g2 = mod_poly(g + t * e + q * g, m2);
    const IntPoly h2 = mod_poly(h + r, m2);
    const IntPoly one = IntPoly(mpz_class(1), f.var());
    const IntPoly b = mod_poly(s * g2 + t * h2 - one, m2);
    auto [c, d] = divmod_monic(mod_poly(s * b, m2), h2);
    s = mod_poly(s - d, m2);
    t = mod_poly(t - t * b - c * g2, m2);
    g = g2;
    h = h2;
    m = m2;
  }
  return {g, h};
}

void lift_tree(const IntPoly& f, const std::vector<IntPoly>& factors, std::size_t lo, std::size_t hi,
               const mpz_class& prime, const mpz_class& modulus, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    out[lo] = mod_poly(f, modulus);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  IntPoly g(mpz_class(1), f.var()), h(mpz_class(1), f.var());
  for (std::size_t i = lo; i < mid; ++i) g = mod_poly(g * factors[i], prime);
  for (std::size_t i = mid; i < hi; ++i) h = mod_poly(h * factors[i], prime);
  auto [gl, hl] = lift_pair(f, g, h, prime, modulus);
  lift_tree(gl, factors, lo, mid, prime, modulus, out);
  lift_tree(hl, factors, mid, hi, prime, modulus, out);
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  }
  return false;
}

struct ModularPick {
  std::uint64_t prime = 0;
  std::vector<IntPoly> factors;  // monic, over [0, p)
};

// Among the first few primes with p not dividing lc and g squarefree mod p,
// the one giving the fewest modular factors.
ModularPick choose_prime(const IntPoly& g) {
  ModularPick best;
  int tried = 0;
  for (std::uint64_t p = 3; tried < kPrimeTrials; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p)) continue;
    const PrimeField field(p);
    const auto gp = to_field(g, field);
    if (gcd(gp, gp.derivative()).degree() != 0) continue;
    ++tried;
    const auto fac = factor_mod(gp);
    if (best.prime == 0 || fac.factors.size() < best.factors.size()) {
      best.prime = p;
      best.factors.clear();
      for (const auto& x : fac.factors) best.factors.push_back(from_field(x.factor, g.var()));
    }
    if (best.factors.size() == 1) break;
  }
  return best;
}

// Visits k-subsets of {0..n-1} in lexicographic order until `fn` returns true.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Irreducible factors of a squarefree primitive g with positive leading
// coefficient and degree >= 2.
std::vector<IntPoly> zassenhaus(const IntPoly& g) {
  ModularPick pick = choose_prime(g);
  if (pick.factors.size() <= 1) return {g};
  const mpz_class prime = static_cast<unsigned long>(pick.prime);

  // Every factor h of g, scaled to leading coefficient lc(g), has
  // coefficients bounded by |lc(g)| * B; twice that keeps the symmetric
  // representative exact.
  const mpz_class lc = g.leading();
  const mpz_class need = 2 * abs(lc) * detail::mignotte_bound(g) + 1;
  mpz_class modulus = prime;
  while (modulus < need) modulus *= modulus;

  std::vector<IntPoly> lifted = detail::hensel_lift(g, pick.factors, prime, modulus);
  std::vector<IntPoly> found;
  IntPoly f = g;
  std::size_t k = 1;
  while (2 * k <= lifted.size()) {
    const mpz_class l = f.leading();
    const mpz_class target_const = l * f.constant_term();
    std::vector<std::size_t> hit;
    IntPoly hit_factor;
    for_each_subset(lifted.size(), k, [&](const std::vector<std::size_t>& s) {
      // Constant term test before forming the full product.
      mpz_class c0 = l;
      for (std::size_t i : s) c0 = c0 * lifted[i].constant_term() % modulus;
      mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), modulus.get_mpz_t());
      if (c0 > modulus / 2) c0 -= modulus;
      if (sgn(c0) == 0 ? sgn(target_const) != 0 : !mpz_divisible_p(target_const.get_mpz_t(), c0.get_mpz_t())) {
        return false;
      }
      IntPoly cand(l, f.var());
      for (std::size_t i : s) cand = symmetric_mod(cand * lifted[i], modulus);
      IntPoly prim = content_primitive(cand).primitive;
      IntPoly quotient;
      if (!try_exact_div(f, prim, quotient)) return false;
      hit = s;
      hit_factor = prim;
      f = quotient;
      return true;
    });
    if (hit.empty()) {
      ++k;
      continue;
    }
    found.push_back(hit_factor);
    for (std::size_t i = hit.size(); i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(hit[i]));
  }
  if (f.degree() > 0) found.push_back(content_primitive(f).primitive);
  return found;
}

}  // namespace

namespace detail {

mpz_class mignotte_bound(const IntPoly& p) {
  mpz_class sumsq = 0;
  for (const auto& c : p.coeffs()) sumsq += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), sumsq.get_mpz_t());
  if (norm * norm < sumsq) ++norm;
  const unsigned long n = static_cast<unsigned long>(std::max(p.degree(), 0));
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, n / 2);
  return binom * norm;
}

std::vector<PolyFactor> squarefree_decomposition_Z(const IntPoly& p) {
  std::vector<PolyFactor> out;
  if (p.degree() < 1) return out;
  // Cheap certificate: squarefree modulo a prime not dividing lc.
  for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u}) {
    if (mpz_divisible_ui_p(p.leading().get_mpz_t(), q)) continue;
    if (is_squarefree_mod(p, q)) return {{p, 1}};
  }
  IntPoly c = gcd_poly(p, p.derivative());
  IntPoly w = exact_div(p, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    IntPoly y = gcd_poly(w, c);
    IntPoly part = exact_div(w, y);
    if (part.degree() > 0) out.push_back({content_primitive(part).primitive, i});
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  return out;
}

std::vector<IntPoly> hensel_lift(const IntPoly& p, const std::vector<IntPoly>& factors_mod_p,
                                 const mpz_class& prime, const mpz_class& modulus) {
  mpz_class inv;
  const mpz_class lc = p.leading();
  if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw InvalidArgument("Hensel lifting: prime divides the leading coefficient");
  }
  const IntPoly monic = mod_poly(p.scaled(inv), modulus);
  std::vector<IntPoly> out(factors_mod_p.size());
  if (!factors_mod_p.empty()) lift_tree(monic, factors_mod_p, 0, factors_mod_p.size(), prime, modulus, out);
  return out;
}

}  // namespace detail

IntPoly PolyFactorization::product() const {
  if (content.get_den() != 1) throw InvalidArgument("non-integral content");
  IntPoly r(content.get_num(), factors.empty() ? std::string() : factors.front().factor.var());
  for (const auto& f : factors) r = r * pow(f.factor, f.multiplicity);
  return r;
}

unsigned PolyFactorization::count() const {
  unsigned n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

std::string PolyFactorization::to_text() const {
  std::ostringstream os;
  os << content.get_str();
  for (const auto& f : factors) {
    os << " * " << msw::to_text(f.factor);
    if (f.multiplicity != 1) os << '^' << f.multiplicity;
  }
  return os.str();
}

PolyFactorization factor_over_Q(const IntPoly& p) {
  if (p.is_zero()) throw InvalidArgument("factor_over_Q of the zero polynomial");
  const ContentSplit split = content_primitive(p);
  PolyFactorization out;
  out.content = mpq_class(split.content * split.sign);
  for (const auto& part : detail::squarefree_decomposition_Z(split.primitive)) {
    std::vector<IntPoly> irr = part.factor.degree() == 1 ? std::vector<IntPoly>{part.factor} : zassenhaus(part.factor);
    for (auto& f : irr) out.factors.push_back({std::move(f), part.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.factor, b.factor); });
  return out;
}

IrreducibilityResult is_irreducible_Q(const IntPoly& p) {
  if (p.degree() < 1) throw InvalidArgument("irreducibility test needs degree >= 1");
  IrreducibilityResult r;
  if (p.degree() == 1) {
    r.irreducible = true;
    r.certificate = IrreducibilityCertificate::kModular;
    r.factor_count = 1;
    return r;
  }
  int tried = 0;
  for (std::uint64_t q = 2; tried < kModularIrreducibilityTrials; ++q) {
    if (!is_prime_u64(q)) continue;
    if (mpz_divisible_ui_p(p.leading().get_mpz_t(), q)) continue;
    ++tried;
    const auto pq = reduce_mod_p(p, q);
    // p | Disc exactly when the reduction has a repeated factor.
    if (gcd(pq, pq.derivative()).degree() != 0) continue;
    if (is_irreducible(pq)) {
      r.irreducible = true;
      r.certificate = IrreducibilityCertificate::kModular;
      r.prime = q;
      r.factor_count = 1;
      return r;
    }
  }
  const PolyFactorization f = factor_over_Q(p);
  r.factor_count = f.count();
  r.irreducible = r.factor_count == 1;
  r.certificate = IrreducibilityCertificate::kFactorization;
  return r;
}

}  // namespace msw
