#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "misiurewicz/exactpoly.hpp"

using namespace msw;

namespace {

IntPoly P(std::initializer_list<long> c, const char* var = "c") {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v, var);
}

IntPoly random_poly(std::mt19937_64& rng, int max_deg, int bound, int min_deg = 0) {
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  std::uniform_int_distribution<int> coef(-bound, bound);
  const int d = deg(rng);
  std::vector<mpz_class> v(static_cast<std::size_t>(d + 1));
  for (auto& x : v) x = coef(rng);
  while (sgn(v.back()) == 0) v.back() = coef(rng);
  return IntPoly(v, "c");
}

// Sylvester determinant over Q by Gaussian elimination; independent of the
// subresultant code path.
mpz_class sylvester_resultant(const IntPoly& a, const IntPoly& b) {
  const int m = a.degree();
  const int n = b.degree();
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<mpq_class>> mat(static_cast<std::size_t>(size), std::vector<mpq_class>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) mat[r][r + j] = a.coeff(static_cast<std::size_t>(m - j));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) mat[n + r][r + j] = b.coeff(static_cast<std::size_t>(n - j));
  mpq_class det = 1;
  for (int col = 0; col < size; ++col) {
    int piv = -1;
    for (int r = col; r < size; ++r)
      if (sgn(mat[r][col]) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) { std::swap(mat[piv], mat[col]); det = -det; }
    det *= mat[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (sgn(mat[r][col]) == 0) continue;
      mpq_class f = mat[r][col] / mat[col][col];
      for (int k = col; k < size; ++k) mat[r][k] -= f * mat[col][k];
    }
  }
  EXPECT_EQ(det.get_den(), 1);
  return det.get_num();
}

// Monic GCD over Q by naive Euclid on rational coefficient vectors.
std::vector<mpq_class> naive_gcd(const IntPoly& a, const IntPoly& b) {
  auto trim = [](std::vector<mpq_class>& v) { while (!v.empty() && sgn(v.back()) == 0) v.pop_back(); };
  std::vector<mpq_class> x(a.coeffs().begin(), a.coeffs().end());
  std::vector<mpq_class> y(b.coeffs().begin(), b.coeffs().end());
  while (!y.empty()) {
    std::vector<mpq_class> r = x;
    while (r.size() >= y.size() && !r.empty()) {
      const std::size_t shift = r.size() - y.size();
      const mpq_class t = r.back() / y.back();
      for (std::size_t i = 0; i < y.size(); ++i) r[shift + i] -= t * y[i];
      r.pop_back();
      trim(r);
    }
    x = y;
    y = r;
  }
  const mpq_class lc = x.back();
  for (auto& c : x) c /= lc;
  return x;
}

}  // namespace

TEST(RingOps, Examples) {
  EXPECT_EQ(P({0, 1}) * P({1, 1}), P({0, 1, 1}));
  EXPECT_EQ(P({1, 1, 2, 1}).derivative(), P({1, 4, 3}));
  EXPECT_EQ(evaluate(P({0, 1, 1}), mpz_class(-1)), 0);
  EXPECT_EQ(pow(P({1, 1}), 3), P({1, 3, 3, 1}));
  EXPECT_EQ((P({1, 1}) - P({1, 1})).degree(), kZeroDegree);
}

TEST(RingOps, MixedTagsRejected) {
  EXPECT_THROW(P({0, 1}, "c") + P({0, 1}, "a"), VariableMismatch);
  EXPECT_THROW(P({0, 1}, "c") * P({0, 1}, "a"), VariableMismatch);
  // Untagged constants combine with anything.
  EXPECT_EQ((P({0, 1}, "c") + IntPoly(3)).var(), "c");
}

TEST(ExactDiv, Examples) {
  EXPECT_EQ(exact_div(P({0, 1, 1}), P({0, 1})), P({1, 1}));
  EXPECT_EQ(exact_div(P({0, 1, 1, 2, 1}), P({0, 1})), P({1, 1, 2, 1}));
  EXPECT_THROW(exact_div(P({1, 0, 1}), P({0, 1})), NotDivisible);
  EXPECT_THROW(exact_div(P({1, 1}), P({0, 2})), NotDivisible);
}

TEST(ExactDiv, ProductRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    IntPoly a = random_poly(rng, 8, 20);
    IntPoly b = random_poly(rng, 8, 20);
    EXPECT_EQ(exact_div(a * b, b), a);
  }
}

TEST(ContentPrimitive, Examples) {
  auto s = content_primitive(P({0, 4, 6}));
  EXPECT_EQ(s.content, 2);
  EXPECT_EQ(s.primitive, P({0, 2, 3}));
  auto n = content_primitive(P({0, -1}));
  EXPECT_EQ(n.content, 1);
  EXPECT_EQ(n.sign, -1);
  EXPECT_EQ(n.primitive, P({0, 1}));
  auto z = content_primitive(IntPoly());
  EXPECT_EQ(z.content, 0);
  EXPECT_TRUE(z.primitive.is_zero());
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd_poly(P({-1, 0, 1}), P({-1, 1})), P({-1, 1}));
  const IntPoly g203 = P({1, 1, 2, 1});
  EXPECT_EQ(gcd_poly(g203, g203.derivative()), P({1}));
  const IntPoly q = P({1, 3, 1});
  EXPECT_EQ(gcd_poly(q * q, q), q);
  EXPECT_EQ(gcd_poly(q.scaled(-6), IntPoly()), q);
}

TEST(Gcd, AgreesWithRationalEuclid) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    IntPoly common = random_poly(rng, 3, 5);
    IntPoly a = random_poly(rng, 5, 9, 1) * common;
    IntPoly b = random_poly(rng, 5, 9, 1) * common;
    IntPoly g = gcd_poly(a, b);
    auto expected = naive_gcd(a, b);
    ASSERT_EQ(g.size(), expected.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      EXPECT_EQ(mpq_class(g.coeffs()[k]) / mpq_class(g.leading()), expected[k]);
    }
    EXPECT_GT(sgn(g.leading()), 0);
  }
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(P({0, 1}), P({1, 1})), 1);
  // Res_v(v - a, v + a) = 2a under the Sylvester convention.
  const IntPoly a = IntPoly::variable("a");
  BiPoly v_minus_a(std::vector<IntPoly>{-a, IntPoly(1)}, "v");
  BiPoly v_plus_a(std::vector<IntPoly>{a, IntPoly(1)}, "v");
  EXPECT_EQ(resultant(v_minus_a, v_plus_a), a.scaled(2));
  EXPECT_THROW(resultant(IntPoly(), P({1, 1})), InvalidArgument);
}

TEST(Resultant, FactorsOfG7_0_3) {
  const IntPoly f1 = P({1, 0, 0, -1, 0, 0, 1});
  const IntPoly f2 = P({1, 0, 0, 1, 0, 0, 1});
  std::vector<mpz_class> big(37);
  big[0] = 1; big[12] = 6; big[18] = 15; big[24] = 14; big[30] = 6; big[36] = 1;
  const IntPoly f3(big, "c");
  std::vector<mpz_class> got = {abs(resultant(f1, f2)), abs(resultant(f1, f3)), abs(resultant(f2, f3))};
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<mpz_class>{64, 6859, 6859}));
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    IntPoly a = random_poly(rng, 6, 9, 1);
    IntPoly b = random_poly(rng, 6, 9, 1);
    EXPECT_EQ(resultant(a, b), sylvester_resultant(a, b)) << to_text(a) << " " << to_text(b);
  }
}

TEST(Resultant, AntisymmetryProperty) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    IntPoly a = random_poly(rng, 6, 9, 1);
    IntPoly b = random_poly(rng, 6, 9, 1);
    const int sign = ((a.degree() * b.degree()) & 1) ? -1 : 1;
    EXPECT_EQ(resultant(a, b), resultant(b, a) * sign);
  }
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(P({1, 1, 2, 1})), -23);
  EXPECT_EQ(discriminant(P({1, 0, 1})), -4);
  EXPECT_EQ(discriminant(P({1, -2, 1})), 0);
  EXPECT_THROW(discriminant(P({5})), InvalidArgument);
}

TEST(Discriminant, ProductFormulaProperty) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    IntPoly a = random_poly(rng, 6, 9, 1);
    IntPoly b = random_poly(rng, 6, 9, 1);
    mpz_class r = resultant(a, b);
    EXPECT_EQ(discriminant(a * b), discriminant(a) * discriminant(b) * r * r);
  }
}

TEST(Multiply, KroneckerMatchesSchoolbook) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    IntPoly a = random_poly(rng, 80, 1000000, 30);
    IntPoly b = random_poly(rng, 80, 1000000, 30);
    EXPECT_EQ(detail::multiply_kronecker(a.coeffs(), b.coeffs()),
              detail::multiply_schoolbook(a.coeffs(), b.coeffs()));
  }
}

TEST(BiPoly, EvaluationCommutesWithArithmetic) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    std::vector<IntPoly> ca, cb;
    for (int k = 0; k < 4; ++k) ca.push_back(random_poly(rng, 3, 5).with_var("a"));
    for (int k = 0; k < 3; ++k) cb.push_back(random_poly(rng, 3, 5).with_var("a"));
    BiPoly x(ca, "v"), y(cb, "v");
    const mpz_class a0 = static_cast<long>(rng() % 7) - 3;
    const mpz_class v0 = static_cast<long>(rng() % 7) - 3;
    auto at = [&](const BiPoly& p) { return evaluate(evaluate_inner(p, a0), v0); };
    EXPECT_EQ(at(x * y), at(x) * at(y));
    EXPECT_EQ(at(x + y), at(x) + at(y));
    EXPECT_EQ(evaluate(evaluate_outer(x, v0), a0), at(x));
  }
}

TEST(RatPoly, DivmodReconstructs) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    RatPoly a(random_poly(rng, 7, 9), mpz_class(static_cast<long>(rng() % 5 + 1)));
    RatPoly b(random_poly(rng, 4, 9), mpz_class(static_cast<long>(rng() % 5 + 1)));
    auto [q, r] = divmod(a, b);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_EQ(q * b + r, a);
  }
  RatPoly half(P({1, 2}), 4);
  EXPECT_EQ(half.denominator(), 4);
  EXPECT_EQ(half.coeff(1), mpq_class(1, 2));
  EXPECT_EQ(half.monic(), RatPoly(P({1, 2}), 2));
}

TEST(Text, CanonicalForm) {
  EXPECT_EQ(to_text(P({1, 1, 2, 1})), "poly(c)=[1,1,2,1]");
  EXPECT_EQ(to_text(IntPoly(std::vector<mpz_class>{}, "c")), "poly(c)=[]");
  EXPECT_EQ(to_pretty(P({1, -1, 0, 2})), "2*c^3 - c + 1");
  const IntPoly a = IntPoly::variable("a");
  BiPoly b(std::vector<IntPoly>{-a, IntPoly(1)}, "v");
  EXPECT_EQ(to_text(b), "poly(a,v)=[[0,-1],[1]]");
  EXPECT_THROW(parse_int_poly("poly(c)=[1,,2]"), ParseError);
  EXPECT_THROW(parse_int_poly("poly(c)=[1,0]"), ParseError);
}

TEST(Text, RoundTripProperty) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    IntPoly p = random_poly(rng, 10, 1000000);
    EXPECT_EQ(parse_int_poly(to_text(p)), p);
  }
}
