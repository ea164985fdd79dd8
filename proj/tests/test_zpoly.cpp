#include <gtest/gtest.h>

#include "cuspcert/error.hpp"
#include "cuspcert/order.hpp"
#include "cuspcert/zpoly.hpp"
#include "test_support.hpp"

namespace cuspcert {
namespace {

// Sylvester matrix determinant by fraction-free Bareiss elimination.
BigInt sylvester_resultant(const ZPoly& f, const ZPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) a[r][r + i] = f.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) a[n + r][r + i] = g.coeff(n - i);
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < size; ++r)
        if (a[r][k] != 0) swap = r;
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < size; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

BigInt discriminant_oracle(const ZPoly& f) {
  const int n = f.degree();
  const BigInt r = sylvester_resultant(f, f.derivative());
  const BigInt s = (n * (n - 1) / 2) % 2 == 0 ? BigInt(1) : BigInt(-1);
  return s * r / f.leading();
}

ZPoly random_poly(std::mt19937_64& rng, int degree, bool monic) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<BigInt> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(coeff(rng));
  long lead = monic ? 1 : coeff(rng);
  if (lead == 0) lead = 3;
  c.emplace_back(lead);
  return ZPoly(std::move(c));
}

TEST(ZPoly, TrimsAndFormats) {
  EXPECT_EQ(ZPoly({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(ZPoly({0, 0}).is_zero());
  EXPECT_EQ(ZPoly({1, -1, 0, 1}).to_string("x"), "x^3 - x + 1");
}

TEST(ZPoly, Arithmetic) {
  const ZPoly a{1, 1}, b{-1, 1};
  EXPECT_EQ(a * b, ZPoly({-1, 0, 1}));
  EXPECT_EQ(a + b, ZPoly({0, 2}));
  EXPECT_EQ(a - a, ZPoly{});
  EXPECT_EQ(ZPoly({1, 0, 3}).derivative(), ZPoly({0, 6}));
  EXPECT_EQ(ZPoly({1, 2, 3}).evaluate(2), 17);
  EXPECT_EQ(ZPoly({1, 2, 3}).evaluate_mod(2, 5), 2u);
}

TEST(ZPoly, RemainderByMonic) {
  const ZPoly f{1, 0, 1};
  EXPECT_EQ(ZPoly({0, 0, 0, 1}).rem_monic(f), ZPoly({0, -1}));
  EXPECT_THROW((void)ZPoly({1, 1}).rem_monic(ZPoly{1, 2}), DomainError);
}

TEST(Discriminant, SmallKnownValues) {
  EXPECT_EQ(poly_discriminant(ZPoly{1, 0, 1}), -4);
  EXPECT_EQ(poly_discriminant(ZPoly{-1, -1, 1}), 5);
  EXPECT_EQ(poly_discriminant(ZPoly{-2, 0, 0, 1}), -108);
  EXPECT_THROW((void)poly_discriminant(ZPoly{5}), DomainError);
}

TEST(Discriminant, TraceFieldPolynomialMatchesOracle) {
  const auto& f = *testing::knot_spec().min_poly;
  EXPECT_EQ(discriminant_oracle(f), BigInt("156166337"));
  EXPECT_EQ(poly_discriminant(f), BigInt("156166337"));
}

TEST(Discriminant, PrintedPolynomialDiffers) {
  const ZPoly printed = testing::printed_trace_polynomial();
  EXPECT_EQ(discriminant_oracle(printed), BigInt(5040873));
  EXPECT_EQ(poly_discriminant(printed), BigInt(5040873));
}

TEST(Discriminant, AgreesWithSylvesterOnRandomPolynomials) {
  auto rng = testing::seeded(1);
  for (int trial = 0; trial < 100; ++trial) {
    const ZPoly f = random_poly(rng, 2 + trial % 7, trial % 2 == 0);
    EXPECT_EQ(poly_discriminant(f), discriminant_oracle(f)) << f.to_string();
  }
}

TEST(Resultant, AgreesWithSylvesterOnRandomPairs) {
  auto rng = testing::seeded(2);
  for (int trial = 0; trial < 100; ++trial) {
    const ZPoly f = random_poly(rng, 1 + trial % 5, false);
    const ZPoly g = random_poly(rng, 1 + (trial / 5) % 5, false);
    EXPECT_EQ(resultant(f, g), sylvester_resultant(f, g)) << f.to_string() << " , " << g.to_string();
  }
}

TEST(Resultant, CommonRootGivesZero) {
  EXPECT_EQ(resultant(ZPoly{-1, 0, 1}, ZPoly{-1, 1}), 0);
}

TEST(OrderReduce, ReducesModuloTheTraceFieldPolynomial) {
  const auto f = testing::knot_spec().min_poly;
  const auto t8 = order_reduce(ZPoly::monomial(1, 8), f);
  EXPECT_EQ(t8.rep(), ZPoly({-1, -2, 0, -2, -2, 3, -5, 3}));
  const auto low = order_reduce(ZPoly{3, 1}, f);
  EXPECT_EQ(low.rep(), ZPoly({3, 1}));
  EXPECT_EQ(order_reduce(*f, f).rep(), ZPoly{});
}

TEST(OrderReduce, IsARingHomomorphism) {
  const auto f = testing::knot_spec().min_poly;
  auto rng = testing::seeded(3);
  for (int trial = 0; trial < 100; ++trial) {
    const ZPoly a = random_poly(rng, 12, false), b = random_poly(rng, 10, false);
    EXPECT_EQ(order_reduce(a * b, f), order_reduce(a, f) * order_reduce(b, f));
    EXPECT_EQ(order_reduce(a + b, f), order_reduce(a, f) + order_reduce(b, f));
  }
}

TEST(OrderElement, RejectsNonMonicModulus) {
  EXPECT_THROW(OrderElement(ZPoly{1}, std::make_shared<const ZPoly>(ZPoly{1, 2})), DomainError);
}

}  // namespace
}  // namespace cuspcert
