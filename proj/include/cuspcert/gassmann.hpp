#pragma once

#include <optional>
#include <vector>

#include "cuspcert/group.hpp"

namespace cuspcert {

inline constexpr std::size_t kMaxSubgroupSearchOrder = 1000;

// All subgroups, or all of order exactly order_filter, sorted by (order, ids).
// Grows subgroups from the cyclic ones by adjoining one element at a time;
// with a filter, only subgroups whose order divides it are kept.
// Throws CapacityError above kMaxSubgroupSearchOrder.
std::vector<Subgroup> enumerate_subgroups(const Group& g, std::optional<std::size_t> order_filter = std::nullopt);

struct SubgroupClass {
  Subgroup representative;  // smallest member of the orbit under (order, ids)
  std::vector<Subgroup> members;
};

// Orbits of the given subgroups under conjugation, ordered by representative.
std::vector<SubgroupClass> subgroup_conjugacy_classes(const Group& g, const std::vector<Subgroup>& subs);

/// #(H ∩ [g]) for each conjugacy class, indexed like the ConjClassTable.
struct IntersectionVector {
  std::vector<std::size_t> counts;
  friend bool operator==(const IntersectionVector&, const IntersectionVector&) = default;
};

IntersectionVector intersection_vector(const ConjClassTable& classes, const Subgroup& h);

// First x with x a x^-1 = b, if any.
std::optional<ElementId> find_conjugator(const Group& g, const Subgroup& a, const Subgroup& b);

struct GassmannPair {
  Subgroup first;
  Subgroup second;
  IntersectionVector vector;
  // Every group element was tried as a conjugator and none maps first onto second.
  std::size_t conjugators_checked = 0;
};

// Almost conjugate, non-conjugate pairs of class representatives of index
// `index`, sorted by (order, smallest member id).
std::vector<GassmannPair> find_gassmann_pairs(const Group& g, std::size_t index);

}  // namespace cuspcert
