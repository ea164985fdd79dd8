#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cuspcert/error.hpp"
#include "cuspcert/gassmann.hpp"
#include "cuspcert/kernels.hpp"
#include "cuspcert/psl2.hpp"
#include "test_support.hpp"

namespace cuspcert {
namespace {

TEST(ProjMat2, CanonicalSignIsShared) {
  const auto f = FiniteField::prime_field(7);
  const auto m = make_proj(f, 6, 1, 6, 0);
  EXPECT_EQ(m, make_proj(f, 1, 6, 1, 0));
  EXPECT_TRUE(f->is_positive(m[0]) || (m[0] == 0 && f->is_positive(m[1])));
  EXPECT_THROW((void)make_proj(f, 1, 1, 1, 1), DomainError);
}

TEST(ProjMat2, InverseAndPowers) {
  const auto f = FiniteField::prime_field(11);
  const auto m = make_proj(f, 4, 3, 1, 1);
  EXPECT_TRUE(proj_mul(m, proj_inverse(m)).is_identity());
  const auto order = element_order(m);
  EXPECT_TRUE(proj_pow(m, static_cast<long long>(order)).is_identity());
  EXPECT_EQ(proj_pow(m, -1), proj_inverse(m));
}

// |PSL(2,q)| by brute force over all matrices of determinant one.
std::uint64_t brute_psl_order(std::uint64_t p) {
  std::uint64_t sl = 0;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d) sl += (a * d + p * p - b * c) % p == 1;
  return p == 2 ? sl : sl / 2;
}

TEST(Psl2, EnumeratedOrders) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const auto g = enumerate_group(p);
    EXPECT_EQ(g->order(), brute_psl_order(p)) << "p=" << p;
    EXPECT_EQ(psl2_order(p), g->order());
  }
  EXPECT_EQ(enumerate_group(2)->order(), 6u);
  EXPECT_EQ(enumerate_group(7)->order(), 168u);
  EXPECT_EQ(enumerate_group(11)->order(), 660u);
  EXPECT_EQ(enumerate_group(2, 2)->order(), 60u);
  EXPECT_EQ(enumerate_group(3, 2)->order(), 360u);
}

TEST(Psl2, CayleyTableMatchesMatrixProduct) {
  for (std::uint64_t p : {5u, 7u}) {
    const auto g = enumerate_group(p);
    auto rng = testing::seeded(p);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g->order() - 1));
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = pick(rng), b = pick(rng);
      EXPECT_EQ(g->element(g->mul(a, b)), proj_mul(g->element(a), g->element(b)));
      EXPECT_EQ(g->mul(a, g->inverse(a)), g->identity());
    }
  }
}

TEST(Psl2, TableIdenticalUnderBothKernels) {
  if (!kernels::variant_available(kernels::Variant::kAvx2)) GTEST_SKIP();
  const auto saved = kernels::active_variant();
  kernels::set_variant(kernels::Variant::kScalar);
  const auto scalar = enumerate_group(11);
  kernels::set_variant(kernels::Variant::kAvx2);
  const auto simd = enumerate_group(11);
  kernels::set_variant(saved);
  for (ElementId a = 0; a < scalar->order(); a += 7)
    for (ElementId b = 0; b < scalar->order(); ++b) ASSERT_EQ(scalar->mul(a, b), simd->mul(a, b));
}

TEST(Psl2, ConjugacyClassSizesOfOrder168) {
  const auto g = enumerate_group(7);
  const auto cc = conjugacy_classes(*g);
  std::multiset<std::size_t> sizes(cc.sizes.begin(), cc.sizes.end());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 21, 42, 56, 24, 24}));
  EXPECT_EQ(cc.representatives.front(), g->identity());
  EXPECT_EQ(group_exponent(*g), 84u);
}

TEST(Psl2, ParabolicExactlyWhenOrderIsP) {
  for (std::uint64_t p : {5u, 7u, 11u}) {
    const auto g = enumerate_group(p);
    for (ElementId id = 0; id < g->order(); ++id) {
      const auto m = g->element(id);
      if (m.is_identity()) continue;
      EXPECT_EQ(is_parabolic(m), element_order(m) == p) << m.to_string();
      EXPECT_EQ(element_order(m), g->element_order(id));
    }
  }
}

TEST(Psl2, UnipotentsGeneratePrimeFieldGroups) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    const auto g = enumerate_group(p);
    const ElementId gens[] = {g->id_of(unipotent_upper(g->field())), g->id_of(unipotent_lower(g->field()))};
    EXPECT_EQ(subgroup_closure(*g, gens).order(), g->order());
  }
}

TEST(Psl2, CapacityGuard) {
  EXPECT_THROW((void)enumerate_group(127), CapacityError);
}

TEST(TableGroup, DihedralAndCyclic) {
  const auto d5 = TableGroup::dihedral(5);
  EXPECT_EQ(d5.order(), 10u);
  const auto cc = conjugacy_classes(d5);
  EXPECT_EQ(cc.count(), 4u);
  const auto c6 = TableGroup::cyclic(6);
  EXPECT_EQ(enumerate_subgroups(c6).size(), 4u);
  EXPECT_THROW(TableGroup(2, {0, 0, 0, 0}), DomainError);
}

TEST(Subgroups, LagrangeAndClosure) {
  for (std::uint64_t p : {5u, 7u}) {
    const auto g = enumerate_group(p);
    auto rng = testing::seeded(100 + p);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g->order() - 1));
    for (int trial = 0; trial < 50; ++trial) {
      const ElementId gens[] = {pick(rng)};
      const auto h = subgroup_closure(*g, gens);
      EXPECT_EQ(g->order() % h.order(), 0u);
      EXPECT_TRUE(is_subgroup(*g, h));
      EXPECT_EQ(h.order(), g->element_order(gens[0]));
    }
    for (const auto& h : enumerate_subgroups(*g)) EXPECT_EQ(g->order() % h.order(), 0u);
  }
}

TEST(Subgroups, NormalityAndIntersection) {
  const auto g = enumerate_group(5);
  EXPECT_TRUE(is_normal(*g, trivial_subgroup(*g)));
  EXPECT_TRUE(is_normal(*g, whole_group(*g)));
  const auto order5 = enumerate_subgroups(*g, 5);
  ASSERT_EQ(order5.size(), 6u);
  EXPECT_FALSE(is_normal(*g, order5[0]));
  EXPECT_EQ(intersect(order5[0], order5[1]).order(), 1u);
  const auto conj = conjugate_subgroup(*g, order5[0], 1);
  EXPECT_TRUE(std::find(order5.begin(), order5.end(), conj) != order5.end());
}

TEST(Subgroups, CountsInPsl27) {
  const auto g = enumerate_group(7);
  std::map<std::size_t, std::size_t> counts;
  for (const auto& h : enumerate_subgroups(*g)) ++counts[h.order()];
  const std::map<std::size_t, std::size_t> expected{{1, 1},  {2, 21}, {3, 28}, {4, 35}, {6, 28}, {7, 8},
                                                    {8, 21}, {12, 14}, {21, 8}, {24, 14}, {168, 1}};
  EXPECT_EQ(counts, expected);
}

}  // namespace
}  // namespace cuspcert
