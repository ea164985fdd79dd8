#include <gtest/gtest.h>

#include <algorithm>

#include "cuspcert/error.hpp"
#include "cuspcert/splitting.hpp"
#include "test_support.hpp"

namespace cuspcert {
namespace {

std::vector<int> degrees(const std::vector<PrimeIdeal>& ideals) {
  std::vector<int> d;
  for (const auto& i : ideals) d.push_back(i.inertia_degree);
  std::sort(d.begin(), d.end());
  return d;
}

OrderElement random_element(std::mt19937_64& rng, const std::shared_ptr<const ZPoly>& f) {
  std::uniform_int_distribution<long> coeff(-50, 50);
  std::vector<BigInt> c;
  for (int i = 0; i < f->degree(); ++i) c.emplace_back(coeff(rng));
  return OrderElement(ZPoly(std::move(c)), f);
}

TEST(Splitting, InertiaDegreesAtSevenAndEleven) {
  const auto& f = testing::knot_spec().min_poly;
  const auto at7 = split_prime(f, 7);
  EXPECT_EQ(degrees(at7), (std::vector<int>{1, 2, 5}));
  EXPECT_EQ(at7.front().local_factor, FpPoly(7, {6, 1}));
  const auto at11 = split_prime(f, 11);
  EXPECT_EQ(degrees(at11), (std::vector<int>{1, 1, 6}));
  const auto linear = degree_one_ideals(f, 11);
  ASSERT_EQ(linear.size(), 2u);
  EXPECT_EQ(degree_one_ideal(f, 11, 4).local_factor, FpPoly(11, {7, 1}));
  EXPECT_EQ(degree_one_ideal(f, 11, 4).root(), 4u);
}

TEST(Splitting, DegreeSumOverUnramifiedPrimes) {
  const auto& f = testing::knot_spec().min_poly;
  const BigInt disc = poly_discriminant(*f);
  for (std::uint64_t p = 2; p < 200; ++p) {
    if (!is_prime(p) || mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
    const auto d = degrees(split_prime(f, p));
    int sum = 0;
    for (int x : d) sum += x;
    EXPECT_EQ(sum, f->degree()) << "p=" << p;
  }
}

TEST(Splitting, RamifiedPrimeIsRejected) {
  EXPECT_THROW((void)split_prime(ZPoly{1, 0, 1}, 2), PreconditionError);
}

TEST(Splitting, NonRootIsRejected) {
  EXPECT_THROW((void)degree_one_ideal(testing::knot_spec().min_poly, 7, 2), PreconditionError);
}

TEST(ResidueMap, HomomorphismOnSeededPairs) {
  const auto& f = testing::knot_spec().min_poly;
  for (const auto& ideal : {degree_one_ideal(f, 7, 1), degree_one_ideal(f, 11, 4), split_prime(f, 7)[1]}) {
    const ResidueMap rho(ideal);
    auto rng = testing::seeded(ideal.p * 31 + static_cast<std::uint64_t>(ideal.inertia_degree));
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_element(rng, f), b = random_element(rng, f);
      EXPECT_EQ(rho(a * b), rho(a) * rho(b));
      EXPECT_EQ(rho(a + b), rho(a) + rho(b));
    }
    EXPECT_EQ(rho(OrderElement::one(f)).code(), 1u);
    EXPECT_EQ(rho.field()->order(), ideal.inertia_degree == 1 ? ideal.p : ideal.p * ideal.p);
  }
}

TEST(ResidueMap, DegreeOneIsEvaluationAtTheRoot) {
  const auto& f = testing::knot_spec().min_poly;
  const auto ideal = degree_one_ideal(f, 11, 4);
  auto rng = testing::seeded(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_element(rng, f);
    EXPECT_EQ(residue_of(a, ideal).code(), a.rep().evaluate_mod(4, 11));
  }
}

}  // namespace
}  // namespace cuspcert
