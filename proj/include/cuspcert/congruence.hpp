#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cuspcert/manifold_spec.hpp"
#include "cuspcert/psl2.hpp"
#include "cuspcert/splitting.hpp"

namespace cuspcert {

/// Level-p congruence homomorphism from the manifold group to PSL(2, O/p).
struct CongruenceRep {
  std::shared_ptr<const ManifoldSpec> spec;
  PrimeIdeal ideal;
  FieldPtr field;
  std::map<char, ProjMat2> images;
  WordOrder order = WordOrder::kLeftToRight;

  [[nodiscard]] ProjMat2 image_of(const Word& w) const;
};

// Reduces every generator entry through the residue map, canonicalizes, and
// checks that each relator maps to the identity. Throws
// InconsistentSpecError when a determinant or relator check fails.
CongruenceRep build_congruence_rep(std::shared_ptr<const ManifoldSpec> spec, PrimeIdeal ideal,
                                   WordOrder order = WordOrder::kLeftToRight);

// Image subgroup of the generators inside the enumerated PSL(2,q).
Subgroup image_subgroup(const CongruenceRep& rep, const FiniteGroup& group);

struct SurjectivityCertificate {
  std::size_t closure_size = 0;
  std::size_t group_order = 0;
  bool surjective = false;
};

// Exhaustive closure compared with |PSL(2,q)|. Enumerates the group when none
// is supplied; throws CapacityError above the group-order guard.
SurjectivityCertificate certify_surjective(const CongruenceRep& rep, GroupPtr group = nullptr);

struct PeripheralCertificate {
  ProjMat2 meridian_image;
  ProjMat2 longitude_image;
  bool meridian_parabolic = false;
  bool longitude_parabolic = false;
  // Elements of the subgroup generated by both images, sorted.
  std::vector<ProjMat2> image_elements;
  bool nontrivial = false;
  bool all_nontrivial_parabolic = false;
  // Set only over prime fields: the image has order exactly p.
  std::optional<bool> order_is_p;

  [[nodiscard]] std::size_t image_order() const { return image_elements.size(); }
  [[nodiscard]] bool ok() const { return nontrivial && all_nontrivial_parabolic && order_is_p.value_or(true); }
};

struct PRepCertificate {
  SurjectivityCertificate surjectivity;
  std::vector<PeripheralCertificate> peripherals;
  bool overall = false;
};

PRepCertificate certify_prep(const CongruenceRep& rep, GroupPtr group = nullptr);

// Closure of a set of matrices; throws CapacityError past limit elements.
std::vector<ProjMat2> matrix_closure(const std::vector<ProjMat2>& gens, std::size_t limit = kMaxGroupOrder);

bool verify_generation_witness(const CongruenceRep& rep, const Word& witness, const ProjMat2& target);

}  // namespace cuspcert
