#include <gtest/gtest.h>

#include <thread>

#include "misiurewicz/dynatomic.hpp"
#include "misiurewicz/error.hpp"
#include "misiurewicz/exactpoly.hpp"
#include "misiurewicz/ratfactor.hpp"
#include "misiurewicz/resource.hpp"

using namespace msw;

namespace {

IntPoly ipoly(std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return IntPoly(std::move(z), "c");
}

// f^k(w) - w for f(z) = z^d + c and w in Z[c].
IntPoly periodic_defect(unsigned d, unsigned k, const IntPoly& w) {
  IntPoly z = w;
  for (unsigned i = 0; i < k; ++i) z = pow(z, d) + IntPoly::variable("c");
  return z - w;
}

// Phi*_n(w) = prod_{k | n} (f^k(w) - w)^mu(n/k), in Z[c].
IntPoly dynatomic_at(unsigned d, unsigned n, const IntPoly& w) {
  IntPoly num = ipoly({1}), den = ipoly({1});
  for (unsigned k = 1; k <= n; ++k) {
    if (n % k) continue;
    const int mu = mobius(n / k);
    if (mu == 1) num = num * periodic_defect(d, k, w);
    if (mu == -1) den = den * periodic_defect(d, k, w);
  }
  return exact_div(num, den);
}

}  // namespace

TEST(CriticalIterate, Examples) {
  EXPECT_EQ(critical_iterate(2, 2), ipoly({0, 1, 1}));
  EXPECT_EQ(critical_iterate(2, 3), ipoly({0, 1, 1, 2, 1}));
  EXPECT_EQ(critical_iterate(3, 2), ipoly({0, 1, 0, 1}));
  EXPECT_TRUE(critical_iterate(2, 0).is_zero());
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(critical_iterate(3, n).degree(), static_cast<int>(std::pow(3, n - 1)));
}

TEST(CriticalIterate, ResourceCap) {
  const auto saved = resource_cap();
  set_resource_cap(1000);
  EXPECT_THROW(critical_iterate(2, 12), ResourceCapExceeded);
  EXPECT_NO_THROW(critical_iterate(2, 10));
  set_resource_cap(saved);
}

TEST(CriticalIterate, ConcurrentCallsAgree) {
  clear_iterate_cache();
  std::vector<IntPoly> out(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) threads.emplace_back([&out, i] { out[i] = critical_iterate(3, 6); });
  for (auto& t : threads) t.join();
  for (int i = 1; i < 4; ++i) EXPECT_EQ(out[i], out[0]);
}

TEST(Mobius, Values) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(4), 0);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(7), -1);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(12), 0);
}

TEST(Dynatomic, PeriodicExamples) {
  EXPECT_EQ(dynatomic_periodic(2, 1), ipoly({0, 1}));
  EXPECT_EQ(dynatomic_periodic(2, 2), ipoly({1, 1}));
  EXPECT_EQ(dynatomic_periodic(3, 2), ipoly({1, 0, 1}));
}

TEST(Dynatomic, FkExamples) {
  EXPECT_EQ(F_k_poly(2, 2, 1), ipoly({0, 2, 1}));
  EXPECT_EQ(F_k_poly(2, 1, 1), ipoly({0, 1}));
  EXPECT_EQ(F_k_poly(2, 1, 2), ipoly({0, 1, 1}));
  EXPECT_THROW(F_k_poly(2, 0, 1), InvalidArgument);
}

TEST(Dynatomic, PreperiodicExamples) {
  EXPECT_EQ(dynatomic_preperiodic(2, 1, 2), ipoly({1, 1}));
  EXPECT_EQ(dynatomic_preperiodic(2, 2, 1), ipoly({0, 2, 1}));
  EXPECT_EQ(dynatomic_preperiodic(2, 1, 1), ipoly({0, 1}));
}

TEST(Dynatomic, PreperiodicMatchesCompositionForm) {
  for (unsigned m : {1u, 2u}) {
    for (unsigned n : {1u, 2u}) {
      const IntPoly lhs = dynatomic_preperiodic(2, m, n);
      const IntPoly rhs =
          exact_div(dynatomic_at(2, n, critical_iterate(2, m)), dynatomic_at(2, n, critical_iterate(2, m - 1)));
      EXPECT_EQ(lhs, rhs) << m << "," << n;
    }
  }
}

TEST(Gleason, Examples) {
  const auto g = gleason(2, 0, 3);
  EXPECT_EQ(g.poly, ipoly({1, 1, 2, 1}));
  EXPECT_FALSE(g.special_case);
  EXPECT_EQ(gleason(2, 2, 1).poly, ipoly({2, 1}));
  const auto g12 = gleason(2, 1, 2);
  EXPECT_TRUE(g12.special_case);
  EXPECT_EQ(g12.poly, ipoly({1}));
  EXPECT_EQ(to_text(gleason(2, 0, 3).poly), "poly(c)=[1,1,2,1]");
}

TEST(Count, Examples) {
  EXPECT_EQ(misiurewicz_count(2, 0, 6), 27);
  EXPECT_EQ(misiurewicz_count(2, 2, 1), 1);
  EXPECT_EQ(misiurewicz_count(2, 1, 2), 0);
}

TEST(Gleason, ProductIdentity) {
  for (unsigned d = 2; d <= 5; ++d) {
    for (unsigned n = 1; n <= 6; ++n) {
      IntPoly prod = ipoly({1});
      for (unsigned k = 1; k <= n; ++k)
        if (n % k == 0) prod = prod * gleason(d, 0, k).poly;
      EXPECT_EQ(prod, critical_iterate(d, n)) << d << "," << n;
    }
  }
}

TEST(Gleason, DegreeMatchesCountMonicSquarefree) {
  struct Range {
    unsigned d, mmax, nmax;
  };
  for (const Range r : {Range{2, 3, 3}, Range{3, 3, 3}, Range{4, 2, 2}, Range{5, 2, 2}}) {
    for (unsigned m = 0; m <= r.mmax; ++m) {
      for (unsigned n = 1; n <= r.nmax; ++n) {
        const IntPoly g = gleason(r.d, m, n).poly;
        EXPECT_EQ(mpz_class(g.degree()), misiurewicz_count(r.d, m, n)) << r.d << "," << m << "," << n;
        EXPECT_EQ(g.leading(), 1);
        if (g.degree() >= 1) EXPECT_EQ(gcd_poly(g, g.derivative()).degree(), 0);
      }
    }
  }
}

TEST(Gleason, IrreducibilityTable) {
  // d = 2 and d = 3 rows: every listed pair irreducible.
  for (unsigned m = 0; m <= 4; ++m)
    for (unsigned n = 1; n <= 3; ++n) {
      const IntPoly g = gleason(2, m, n).poly;
      if (g.degree() < 1) continue;
      EXPECT_TRUE(is_irreducible_Q(g).irreducible) << "d=2 " << m << "," << n;
    }
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned n = 1; n <= 2; ++n) {
      const IntPoly g = gleason(3, m, n).poly;
      if (g.degree() < 1) continue;
      EXPECT_TRUE(is_irreducible_Q(g).irreducible) << "d=3 " << m << "," << n;
    }
  // d = 4: (0,2), (2,1), (3,1), (4,1) reducible with two factors; (0,3) irreducible.
  for (const auto [m, n] : {std::pair{0u, 2u}, {2u, 1u}, {3u, 1u}, {4u, 1u}}) {
    const auto r = is_irreducible_Q(gleason(4, m, n).poly);
    EXPECT_FALSE(r.irreducible) << m << "," << n;
    EXPECT_EQ(r.factor_count, 2u) << m << "," << n;
  }
  EXPECT_TRUE(is_irreducible_Q(gleason(4, 0, 3).poly).irreducible);
  // G_4(3,2) splits as degree 45 times degree 90; the product is checked exactly.
  const auto g432 = factor_over_Q(gleason(4, 3, 2).poly);
  ASSERT_EQ(g432.factors.size(), 2u);
  EXPECT_EQ(g432.factors[0].factor.degree(), 45);
  EXPECT_EQ(g432.factors[1].factor.degree(), 90);
  EXPECT_EQ(g432.product(), gleason(4, 3, 2).poly);
  // d = 6: c^5 + 1 has two factors, G_6(2,2) has three.
  EXPECT_EQ(is_irreducible_Q(gleason(6, 0, 2).poly).factor_count, 2u);
  EXPECT_EQ(is_irreducible_Q(gleason(6, 2, 2).poly).factor_count, 3u);
  // d = 5: (0,2), (2,1), (3,1), (2,2) irreducible.
  for (const auto [m, n] : {std::pair{0u, 2u}, {2u, 1u}, {3u, 1u}, {2u, 2u}})
    EXPECT_TRUE(is_irreducible_Q(gleason(5, m, n).poly).irreducible) << m << "," << n;
}
