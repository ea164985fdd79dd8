#pragma once

// Cusp counting in covers, reduced to double cosets in a finite quotient.
//
// Let rho: Gamma -> G be onto, H <= G, Delta = rho^-1(H), and P a peripheral
// subgroup with image Pbar = rho(P). Because Delta contains ker(rho), the
// cusps of Delta lying over the cusp of P correspond to the double cosets
// H \ G / Pbar, and the cusp through gamma has local degree
//   [P : P ∩ gamma^-1 Delta gamma] = [Pbar : Pbar ∩ g^-1 H g],  g = rho(gamma).
// Everything below works in G; the infinite groups never appear.

#include <cstdint>
#include <vector>

#include "cuspcert/group.hpp"

namespace cuspcert {

struct DoubleCoset {
  ElementId representative;  // smallest element id in HgP
  std::size_t size;          // |HgP|
};

// H \ G / P, ordered by representative.
std::vector<DoubleCoset> double_cosets(const Group& g, const Subgroup& h, const Subgroup& p);

struct CuspEntry {
  ElementId representative;
  std::size_t local_degree;  // [P : P ∩ g^-1 H g]
  std::size_t coset_count;   // |HgP| / |H|
};

struct CuspDecomposition {
  std::size_t group_order = 0;
  std::size_t cover_order = 0;       // |H|
  std::size_t peripheral_order = 0;  // |Pbar|
  std::vector<CuspEntry> entries;

  [[nodiscard]] std::size_t cusp_count() const { return entries.size(); }
  [[nodiscard]] std::size_t index() const { return group_order / cover_order; }
  [[nodiscard]] std::size_t local_degree_sum() const;
};

// One entry per double coset. Throws InternalError if the local degrees do
// not sum to [G : H] or a coset count disagrees with its local degree.
CuspDecomposition cusp_decomposition(const Group& g, const Subgroup& h, const Subgroup& p);

struct CuspPersistence {
  bool single_double_coset = false;
  bool index_matches = false;  // [G:H] = [P : P ∩ H]
  bool product_covers = false;  // H·P = G as sets
  [[nodiscard]] bool remains() const { return single_double_coset; }
};

// The three characterizations, computed independently. Throws InternalError
// if they disagree.
CuspPersistence cusp_persistence(const Group& g, const Subgroup& h, const Subgroup& p);
bool cusp_remains(const Group& g, const Subgroup& h, const Subgroup& p);

// |G| / |P|, cross-checked against the decomposition for H = {1}.
std::size_t normal_cover_cusp_count(const Group& g, const Subgroup& p);

// A transversal of (P ∩ H) in P, one element per right coset (P ∩ H)x.
std::vector<ElementId> right_transversal(const Group& g, const Subgroup& p, const Subgroup& h);

// Checks that the given transversal of P ∩ H in P meets [G:H] distinct right
// cosets of H. Throws DomainError unless the cusp remains.
bool common_transversal_check(const Group& g, const Subgroup& h, const Subgroup& p,
                              const std::vector<ElementId>& transversal);
bool common_transversal_check(const Group& g, const Subgroup& h, const Subgroup& p);

struct CuspBound {
  std::uint64_t exact_count;
  std::uint64_t bound;  // q + 1
  bool pass;
};

// Cusps of the normal cover with group PSL(2,q) and peripheral image of the
// given order. Throws DomainError if the order exceeds q(q-1)/2.
CuspBound cusp_lower_bound_check(std::uint64_t q, std::uint64_t peripheral_order);

}  // namespace cuspcert
