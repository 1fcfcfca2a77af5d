#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "misiurewicz/error.hpp"
#include "misiurewicz/exactpoly.hpp"
#include "misiurewicz/intfactor.hpp"
#include "misiurewicz/ratfactor.hpp"

using namespace msw;

namespace {

IntPoly ipoly(std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return IntPoly(std::move(z), "c");
}

// f^n(0) for f(z) = z^d + c.
IntPoly orbit(unsigned d, int n) {
  const IntPoly c = IntPoly::variable("c");
  IntPoly z(std::vector<mpz_class>{}, "c");
  for (int i = 0; i < n; ++i) z = pow(z, d) + c;
  return z;
}

// Periodic Gleason polynomial for prime n: f^n(0) / f(0).
IntPoly gleason_prime_period(unsigned d, int n) { return exact_div(orbit(d, n), orbit(d, 1)); }

// Rational root test by brute force over divisors of the end coefficients.
bool has_rational_root(const IntPoly& p) {
  if (sgn(p.constant_term()) == 0) return true;
  const mpz_class a0 = abs(p.constant_term());
  const mpz_class an = abs(p.leading());
  for (mpz_class u = 1; u <= a0; ++u) {
    if (a0 % u != 0) continue;
    for (mpz_class w = 1; w <= an; ++w) {
      if (an % w != 0) continue;
      for (int s : {1, -1}) {
        // w^n p(s u / w) as an integer.
        mpz_class acc = 0;
        mpz_class wp = 1;
        const int n = p.degree();
        std::vector<mpz_class> wpow(n + 1);
        for (int i = 0; i <= n; ++i) {
          wpow[i] = wp;
          wp *= w;
        }
        mpz_class up = 1;
        for (int i = 0; i <= n; ++i) {
          acc += p.coeff(i) * up * wpow[n - i];
          up *= s * u;
        }
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

// Random primitive irreducible of degree 2 or 3 with positive leading coefficient.
IntPoly random_irreducible(std::mt19937_64& rng) {
  for (;;) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<long> c(n + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 13) - 6;
    c.back() = 1 + static_cast<long>(rng() % 3);
    IntPoly p = ipoly(c);
    if (content_primitive(p).content != 1) continue;
    if (!has_rational_root(p)) return p;
  }
}

}  // namespace

TEST(FactorOverQ, Trivial) {
  const auto f = factor_over_Q(ipoly({-1, 0, 1}));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].factor, ipoly({-1, 1}));
  EXPECT_EQ(f.factors[1].factor, ipoly({1, 1}));
  EXPECT_EQ(f.content, 1);
  EXPECT_EQ(f.to_text(), "1 * poly(c)=[-1,1] * poly(c)=[1,1]");
}

TEST(FactorOverQ, ContentAndMultiplicity) {
  // -6 (c+1)^3 (c^2+1)
  const IntPoly p = ipoly({-6}) * pow(ipoly({1, 1}), 3) * ipoly({1, 0, 1});
  const auto f = factor_over_Q(p);
  EXPECT_EQ(f.content, -6);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].multiplicity, 3u);
  EXPECT_EQ(f.product(), p);
  EXPECT_EQ(f.count(), 4u);
}

TEST(FactorOverQ, SwinnertonDyer) {
  // x^4 - 10x^2 + 1 is irreducible but splits into linears or quadratics
  // modulo every prime, so recombination must reject all pairs.
  const auto f = factor_over_Q(ipoly({1, 0, -10, 0, 1}));
  EXPECT_EQ(f.count(), 1u);
}

TEST(FactorOverQ, GleasonSevenThree) {
  const IntPoly g = gleason_prime_period(7, 3);
  ASSERT_EQ(g.degree(), 48);
  const auto f = factor_over_Q(g);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0].factor, ipoly({1, 0, 0, -1, 0, 0, 1}));
  EXPECT_EQ(f.factors[1].factor, ipoly({1, 0, 0, 1, 0, 0, 1}));
  std::vector<long> big(37, 0);
  big[0] = 1;
  big[12] = 6;
  big[18] = 15;
  big[24] = 14;
  big[30] = 6;
  big[36] = 1;
  EXPECT_EQ(f.factors[2].factor, ipoly(big));
  EXPECT_EQ(f.product(), g);
}

TEST(FactorOverQ, GleasonSevenThreeDiscriminantDecomposition) {
  const auto f = factor_over_Q(gleason_prime_period(7, 3));
  ASSERT_EQ(f.factors.size(), 3u);
  const IntPoly& a = f.factors[0].factor;
  const IntPoly& b = f.factors[1].factor;
  const IntPoly& c = f.factors[2].factor;
  EXPECT_EQ(discriminant(a), mpz_class(-19683));
  EXPECT_EQ(discriminant(b), mpz_class(-19683));
  EXPECT_EQ(factor_int(discriminant(c), 1000000).to_text(), "2^36 * 3^36 * 14731^6");
  std::vector<std::string> res;
  for (const auto& [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}})
    res.push_back(factor_int(abs(resultant(x, y)), 1000000).to_text());
  std::sort(res.begin(), res.end());
  EXPECT_EQ(res, (std::vector<std::string>{"19^3", "19^3", "2^6"}));
  const mpz_class rab = resultant(a, b), rac = resultant(a, c), rbc = resultant(b, c);
  const mpz_class recombined = discriminant(a) * discriminant(b) * discriminant(c) * rab * rab * rac * rac * rbc * rbc;
  EXPECT_EQ(recombined, discriminant(gleason_prime_period(7, 3)));
  EXPECT_EQ(factor_int(recombined, 1000000).to_text(), "2^48 * 3^54 * 19^12 * 14731^6");
}

TEST(FactorOverQ, GleasonTwoIrreducible) {
  for (int n : {2, 3}) EXPECT_EQ(factor_over_Q(gleason_prime_period(2, n)).count(), 1u) << n;
  const IntPoly g4 = exact_div(orbit(2, 4), orbit(2, 2));
  EXPECT_EQ(factor_over_Q(g4).count(), 1u);
}

TEST(FactorOverQ, RecoversRandomProducts) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const int parts = 2 + static_cast<int>(rng() % 3);
    std::vector<IntPoly> inputs;
    IntPoly p = ipoly({1});
    for (int i = 0; i < parts; ++i) {
      inputs.push_back(random_irreducible(rng));
      p = p * inputs.back();
    }
    const auto f = factor_over_Q(p);
    EXPECT_EQ(f.product(), p);
    EXPECT_EQ(f.count(), static_cast<unsigned>(parts)) << to_text(p);
    for (const auto& x : f.factors) {
      EXPECT_TRUE(std::find(inputs.begin(), inputs.end(), x.factor) != inputs.end()) << to_text(x.factor);
      EXPECT_GT(x.factor.leading(), 0);
      EXPECT_EQ(content_primitive(x.factor).content, 1);
    }
  }
}

TEST(FactorOverQ, RejectsZero) {
  EXPECT_THROW(factor_over_Q(IntPoly(std::vector<mpz_class>{}, "c")), InvalidArgument);
}

TEST(IsIrreducibleQ, Examples) {
  const auto g42 = is_irreducible_Q(gleason_prime_period(4, 2));
  EXPECT_FALSE(g42.irreducible);
  EXPECT_EQ(g42.factor_count, 2u);
  // c^5 + 1 = (c + 1)(c^4 - c^3 + c^2 - c + 1)
  const auto g62 = is_irreducible_Q(gleason_prime_period(6, 2));
  EXPECT_FALSE(g62.irreducible);
  EXPECT_EQ(g62.factor_count, 2u);
  const auto g73 = is_irreducible_Q(gleason_prime_period(7, 3));
  EXPECT_FALSE(g73.irreducible);
  EXPECT_EQ(g73.factor_count, 3u);
  const auto q = is_irreducible_Q(ipoly({1, 0, 1}));
  EXPECT_TRUE(q.irreducible);
  EXPECT_EQ(q.certificate, IrreducibilityCertificate::kModular);
  EXPECT_NE(q.prime, 0u);
  const auto sd = is_irreducible_Q(ipoly({1, 0, -10, 0, 1}));
  EXPECT_TRUE(sd.irreducible);
  EXPECT_EQ(sd.certificate, IrreducibilityCertificate::kFactorization);
  EXPECT_THROW(is_irreducible_Q(ipoly({3})), InvalidArgument);
}

TEST(Mignotte, BoundsKnownFactors) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const IntPoly a = random_irreducible(rng), b = random_irreducible(rng);
    const mpz_class bound = detail::mignotte_bound(a * b);
    for (const auto& x : a.coeffs()) EXPECT_LE(abs(x), bound);
    for (const auto& x : b.coeffs()) EXPECT_LE(abs(x), bound);
  }
}
