#include <gtest/gtest.h>

#include "cuspcert/error.hpp"
#include "cuspcert/finite_field.hpp"
#include "test_support.hpp"

namespace cuspcert {
namespace {

TEST(FiniteField, PrimeFieldArithmetic) {
  const auto f = FiniteField::prime_field(7);
  EXPECT_EQ(f->mul(3, 5), 1u);
  EXPECT_EQ(f->inv(3), 5u);
  EXPECT_EQ(f->from_int(-1), 6u);
  EXPECT_TRUE(f->is_positive(1));
  EXPECT_FALSE(f->is_positive(6));
}

TEST(FiniteField, ExtensionModulusIsIrreducible) {
  const auto f49 = FiniteField::extension(7, 2);
  EXPECT_EQ(f49->order(), 49u);
  EXPECT_TRUE(is_irreducible(f49->modulus()));
  EXPECT_THROW(FiniteField(7, FpPoly(7, {6, 0, 1})), DomainError);
}

TEST(FiniteField, FrobeniusOnFortyNine) {
  const auto f = FiniteField::extension(7, 2);
  const auto x = f->generator_x();
  EXPECT_NE(f->pow(x, 7), x);
  EXPECT_EQ(f->pow(x, 49), x);
  for (FiniteField::Code a = 0; a < 49; ++a) {
    for (FiniteField::Code b = 0; b < 49; b += 5) {
      EXPECT_EQ(f->pow(f->add(a, b), 7), f->add(f->pow(a, 7), f->pow(b, 7)));
      EXPECT_EQ(f->pow(f->mul(a, b), 7), f->mul(f->pow(a, 7), f->pow(b, 7)));
    }
  }
}

TEST(FiniteField, FieldAxiomsOnRandomElements) {
  for (const auto& field : {FiniteField::extension(3, 3), FiniteField::extension(2, 5), FiniteField::prime_field(101)}) {
    auto rng = testing::seeded(field->order());
    std::uniform_int_distribution<FiniteField::Code> pick(0, static_cast<FiniteField::Code>(field->order() - 1));
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      EXPECT_EQ(field->mul(a, field->add(b, c)), field->add(field->mul(a, b), field->mul(a, c)));
      EXPECT_EQ(field->add(a, field->neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(field->mul(a, field->inv(a)), 1u);
      }
    }
  }
}

TEST(FiniteField, CoefficientRoundTrip) {
  const auto f = FiniteField::extension(5, 3);
  for (FiniteField::Code a = 0; a < f->order(); ++a) EXPECT_EQ(f->from_coeffs(f->coeffs(a)), a);
}

TEST(FiniteField, ZeroHasNoInverse) {
  EXPECT_THROW((void)FiniteField::prime_field(5)->inv(0), DomainError);
}

TEST(FqElement, WrapperOperators) {
  const auto f = FiniteField::prime_field(11);
  const FqElement a(f, 4), b(f, 9);
  EXPECT_EQ((a * b).code(), 3u);
  EXPECT_EQ((a - b).code(), 6u);
  EXPECT_EQ(a.inverse().code(), 3u);
}

}  // namespace
}  // namespace cuspcert
