#include "cuspcert/congruence.hpp"

#include <algorithm>
#include <set>

#include "cuspcert/error.hpp"

namespace cuspcert {

ProjMat2 CongruenceRep::image_of(const Word& w) const {
  return evaluate_word(w, images, proj_identity(field), proj_mul, proj_inverse, order);
}

CongruenceRep build_congruence_rep(std::shared_ptr<const ManifoldSpec> spec, PrimeIdeal ideal, WordOrder order) {
  if (!(*ideal.modulus == *spec->min_poly)) throw DomainError("ideal " + ideal.label() + " is not an ideal of the spec's order");
  const ResidueMap residue(ideal);
  CongruenceRep rep{spec, ideal, residue.field(), {}, order};
  for (const auto& [name, m] : spec->generators) {
    ProjMat2::Entries e{};
    for (std::size_t i = 0; i < 4; ++i) e[i] = residue(m.e[i]).code();
    try {
      rep.images.emplace(name, canonicalize(rep.field, e));
    } catch (const DomainError& err) {
      throw InconsistentSpecError(std::string("generator ") + name + " modulo " + ideal.label() + ": " + err.what());
    }
  }
  for (const auto& w : spec->relators) {
    const ProjMat2 image = rep.image_of(w);
    if (!image.is_identity())
      throw InconsistentSpecError("relator " + w.letters() + " maps to " + image.to_string() + " modulo " + ideal.label());
  }
  return rep;
}

Subgroup image_subgroup(const CongruenceRep& rep, const FiniteGroup& group) {
  std::vector<ElementId> gens;
  for (const auto& [name, m] : rep.images) gens.push_back(group.id_of(m));
  return subgroup_closure(group, gens);
}

SurjectivityCertificate certify_surjective(const CongruenceRep& rep, GroupPtr group) {
  if (!group) group = enumerate_group(rep.field);
  const Subgroup image = image_subgroup(rep, *group);
  return {image.order(), group->order(), image.order() == group->order()};
}

std::vector<ProjMat2> matrix_closure(const std::vector<ProjMat2>& gens, std::size_t limit) {
  if (gens.empty()) return {};
  std::set<ProjMat2> seen;
  std::vector<ProjMat2> members{proj_identity(gens.front().field())};
  seen.insert(members.front());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (const auto& s : gens) {
      ProjMat2 y = proj_mul(members[i], s);
      if (seen.insert(y).second) {
        members.push_back(std::move(y));
        if (members.size() > limit) throw CapacityError("matrix closure exceeds the element limit");
      }
    }
  return {seen.begin(), seen.end()};
}

PRepCertificate certify_prep(const CongruenceRep& rep, GroupPtr group) {
  PRepCertificate cert;
  cert.surjectivity = certify_surjective(rep, std::move(group));
  const bool prime_field = rep.field->degree() == 1;
  bool all_ok = true;
  for (const auto& pair : rep.spec->peripherals) {
    PeripheralCertificate pc{rep.image_of(pair.meridian), rep.image_of(pair.longitude), false, false, {}, false, false, {}};
    pc.meridian_parabolic = is_parabolic(pc.meridian_image);
    pc.longitude_parabolic = is_parabolic(pc.longitude_image);
    pc.image_elements = matrix_closure({pc.meridian_image, pc.longitude_image});
    pc.nontrivial = pc.image_elements.size() > 1;
    pc.all_nontrivial_parabolic = std::all_of(pc.image_elements.begin(), pc.image_elements.end(),
                                              [](const ProjMat2& m) { return m.is_identity() || is_parabolic(m); });
    if (prime_field) pc.order_is_p = pc.image_elements.size() == rep.field->characteristic();
    all_ok = all_ok && pc.ok();
    cert.peripherals.push_back(std::move(pc));
  }
  cert.overall = cert.surjectivity.surjective && all_ok;
  return cert;
}

bool verify_generation_witness(const CongruenceRep& rep, const Word& witness, const ProjMat2& target) {
  return rep.image_of(witness) == target;
}

}  // namespace cuspcert
