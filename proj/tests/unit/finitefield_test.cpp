#include <gtest/gtest.h>

#include <random>
#include <set>

#include "misiurewicz/error.hpp"
#include "misiurewicz/exactpoly.hpp"
#include "misiurewicz/finitefield.hpp"

using namespace msw;

namespace {

// f_c^n(0) for f_c(z) = z^2 + c.
IntPoly orbit(int n) {
  const IntPoly c = IntPoly::variable("c");
  IntPoly z(std::vector<mpz_class>{}, "c");
  for (int i = 0; i < n; ++i) z = z * z + c;
  return z;
}

// Periodic Gleason polynomial for d = 2, written out for the divisor
// lattices used here.
IntPoly gleason2(int n) {
  switch (n) {
    case 3: return exact_div(orbit(3), orbit(1));
    case 4: return exact_div(orbit(4), orbit(2));
    case 5: return exact_div(orbit(5), orbit(1));
    case 6: return exact_div(orbit(6) * orbit(1), orbit(3) * orbit(2));
    case 7: return exact_div(orbit(7), orbit(1));
    case 8: return exact_div(orbit(8), orbit(4));
    default: return exact_div(orbit(n), orbit(1));
  }
}

IntPoly ipoly(std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return IntPoly(std::move(z), "c");
}

FieldPoly<PrimeField> fpoly(std::uint64_t p, std::vector<long> c) { return reduce_mod_p(ipoly(std::move(c)), p); }

std::vector<int> factor_degrees(const FieldFactorization<PrimeField>& f) {
  std::vector<int> d;
  for (const auto& x : f.factors)
    for (unsigned i = 0; i < x.multiplicity; ++i) d.push_back(x.factor.degree());
  return d;
}

IntPoly random_int_poly(std::mt19937_64& rng, int max_degree) {
  const int n = 1 + static_cast<int>(rng() % max_degree);
  std::vector<long> c(n + 1);
  for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
  if (c.back() == 0) c.back() = 1;
  return ipoly(c);
}

}  // namespace

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(15), InvalidArgument);
  EXPECT_THROW(PrimeField(1), InvalidArgument);
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(PrimeField, InverseAndPow) {
  const PrimeField f(431);
  for (std::uint64_t a = 1; a < 431; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.pow(7, 430), 1u);
  EXPECT_EQ(f.from_int(-1), 430u);
}

TEST(ExtField, LeastModulus) {
  // t^2 + 1 is the least monic irreducible quadratic over F_3; over F_2 it is
  // reducible, so t^2 + t + 1.
  EXPECT_EQ(ExtField::create(PrimeField(3), 2).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(ExtField::create(PrimeField(2), 2).modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(ExtField::create(PrimeField(2), 3).modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
  EXPECT_THROW(ExtField(PrimeField(2), {1, 0, 1}), InvalidArgument);
}

TEST(ExtField, FieldAxioms) {
  const ExtField f = ExtField::create(PrimeField(5), 3);
  EXPECT_EQ(f.size(), 125u);
  for (std::uint64_t i = 1; i < f.size(); ++i) {
    const auto a = f.element(i);
    EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    EXPECT_EQ(f.pth_root(f.frobenius(a)), a);
    EXPECT_EQ(f.pow(a, f.order() - 1), f.one());
  }
  EXPECT_EQ(f.degree_of(f.from_base(3)), 1u);
  EXPECT_EQ(f.degree_of(f.element(5)), 3u);
}

TEST(ReduceModP, Examples) {
  EXPECT_EQ(to_text(reduce_mod_p(ipoly({1, 1, 2, 1}), 2)), "poly(c)=[1,1,0,1]");
  EXPECT_EQ(to_text(reduce_mod_p(ipoly({430, 1}), 431)), "poly(c)=[430,1]");
  EXPECT_EQ(reduce_mod_p(ipoly({430, 1}), 431), fpoly(431, {-1, 1}));
  const auto g = reduce_mod_p(gleason2(3), 23);
  EXPECT_GT(gcd(g, g.derivative()).degree(), 0);
}

TEST(FactorMod, GleasonSixModThirteen) {
  const IntPoly g = gleason2(6);
  ASSERT_EQ(g.degree(), 27);
  const auto fac = factor_mod(reduce_mod_p(g, 13));
  int repeated = 0;
  for (const auto& f : fac.factors) {
    if (f.multiplicity > 1) {
      ++repeated;
      EXPECT_EQ(f.factor.degree(), 2);
      EXPECT_EQ(f.multiplicity, 2u);
      EXPECT_EQ(f.factor, fpoly(13, {1, 3, 1}));
    }
  }
  EXPECT_EQ(repeated, 1);
  EXPECT_EQ(factor_degrees(fac), (std::vector<int>{1, 2, 2, 4, 18}));
}

TEST(FactorMod, FourthRootsOfUnity) {
  EXPECT_EQ(factor_degrees(factor_mod(fpoly(101, {-1, 0, 0, 0, 1}))), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(factor_degrees(factor_mod(fpoly(431, {-1, 0, 0, 0, 1}))), (std::vector<int>{1, 1, 2}));
}

TEST(FactorMod, Serialization) {
  const PrimeField f(431);
  const auto fac = factor_mod(fpoly(431, {-2, 0, 0, 0, 2}));
  EXPECT_EQ(to_text(fac, f), "431^1; 2; [(poly(c)=[1,1], 1), (poly(c)=[430,1], 1), (poly(c)=[1,0,1], 1)]");
}

TEST(FactorMod, CharacteristicPMultiplicities) {
  // (c+1)^6 (c^2+c+1)^2 over F_3 and F_2 exercises the p-th-root branch.
  for (std::uint64_t p : {2u, 3u}) {
    const auto base = pow(fpoly(p, {1, 1}), 6) * pow(fpoly(p, {1, 1, 1}), 2);
    const auto fac = factor_mod(base);
    EXPECT_EQ(fac.product(PrimeField(p)), base);
    for (const auto& x : fac.factors) EXPECT_TRUE(is_irreducible(x.factor));
  }
}

TEST(FactorMod, ExtensionField) {
  // c^2 + 3c + 1 splits over F_169 into two conjugate linear factors.
  const ExtField f169 = ExtField::create(PrimeField(13), 2);
  const auto fac = factor_mod(embed(fpoly(13, {1, 3, 1}), f169));
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0].factor.degree(), 1);
  // c^4 + c + 1 is irreducible over F_2 and splits into two quadratics over F_4.
  const ExtField f4 = ExtField::create(PrimeField(2), 2);
  const auto q = embed(fpoly(2, {1, 1, 0, 0, 1}), f4);
  const auto fq = factor_mod(q);
  EXPECT_EQ(fq.product(f4), q);
  for (const auto& x : fq.factors) EXPECT_EQ(x.factor.degree(), 2);
}

TEST(FactorMod, ReconstructsRandomInputs) {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2u, 3u, 5u, 13u, 101u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      auto a = reduce_mod_p(random_int_poly(rng, 6), p);
      auto b = reduce_mod_p(random_int_poly(rng, 4), p);
      const auto g = a * b * b;
      if (g.is_zero()) continue;
      const auto fac = factor_mod(g, trial);
      EXPECT_EQ(fac.product(f), g);
      for (const auto& x : fac.factors) {
        EXPECT_TRUE(f.equal(x.factor.leading(), f.one()));
        EXPECT_TRUE(is_irreducible(x.factor));
        // One more equal-degree round finds no split.
        std::vector<FieldPoly<PrimeField>> pieces;
        std::mt19937_64 extra(trial);
        detail::equal_degree_split(x.factor, x.factor.degree(), extra, pieces);
        EXPECT_EQ(pieces.size(), 1u);
      }
    }
  }
}

TEST(FactorMod, SeedDoesNotChangeResult) {
  const auto g = reduce_mod_p(gleason2(5), 7);
  EXPECT_EQ(to_text(factor_mod(g, 1), PrimeField(7)), to_text(factor_mod(g, 99), PrimeField(7)));
}

TEST(IsSquarefreeMod, Examples) {
  EXPECT_FALSE(is_squarefree_mod(gleason2(3), 23));
  EXPECT_TRUE(is_squarefree_mod(gleason2(3), 5));
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(is_squarefree_mod(gleason2(n), 2)) << n;
  EXPECT_THROW(is_squarefree_mod(ipoly({1, 0, 3}), 3), InvalidArgument);
}

TEST(IsSquarefreeMod, MatchesDiscriminant) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (int trial = 0; trial < 50;) {
      const IntPoly g = random_int_poly(rng, 8);
      if (g.degree() < 1) continue;
      if (mpz_fdiv_ui(g.leading().get_mpz_t(), p) == 0) continue;
      ++trial;
      const mpz_class disc = discriminant(g);
      const bool p_divides = mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0;
      EXPECT_EQ(is_squarefree_mod(g, p), !p_divides) << to_text(g) << " mod " << p;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 250);
}

TEST(RootsInField, Examples) {
  const auto q = fpoly(13, {1, 3, 1});
  EXPECT_TRUE(roots_in_field(q, PrimeField(13)).empty());
  const ExtField f169 = ExtField::create(PrimeField(13), 2);
  const auto r = roots_in_field(q, f169);
  ASSERT_EQ(r.size(), 2u);
  for (const auto& [x, m] : r) {
    EXPECT_EQ(m, 1u);
    EXPECT_TRUE(f169.is_zero(embed(q, f169).evaluate(x)));
    EXPECT_EQ(f169.degree_of(x), 2u);
  }
  for (std::uint64_t p : {2u, 13u, 431u}) {
    const auto z = roots_in_field(fpoly(p, {0, 1}), PrimeField(p));
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(z[0].first, 0u);
  }
  EXPECT_EQ(roots_in_field(fpoly(101, {-1, 0, 0, 0, 1}), PrimeField(101)).size(), 4u);
}

TEST(RootsInField, FrobeniusOrbitSize) {
  // Roots of a degree-f irreducible factor form one Frobenius orbit of size f.
  const PrimeField f5(5);
  const ExtField f625 = ExtField::create(f5, 4);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = reduce_mod_p(random_int_poly(rng, 6), 5);
    if (g.degree() < 1) continue;
    const auto all = roots_in_field(g, f625);
    unsigned total = 0;
    for (const auto& [x, m] : all) total += m;
    EXPECT_LE(total, static_cast<unsigned>(g.degree()));
    for (const auto& fac : factor_mod(g).factors) {
      const int fd = fac.factor.degree();
      if (4 % fd) continue;
      const auto rs = roots_in_field(fac.factor, f625);
      ASSERT_EQ(rs.size(), static_cast<std::size_t>(fd));
      std::set<std::vector<std::uint64_t>> orbit;
      auto x = rs[0].first;
      for (int i = 0; i < 4; ++i) {
        orbit.insert(x);
        x = f625.frobenius(x);
      }
      EXPECT_EQ(orbit.size(), static_cast<std::size_t>(fd));
    }
  }
}
