#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cuspcert/finite_field.hpp"
#include "cuspcert/group.hpp"

namespace cuspcert {

/// Element of PSL(2, q): a determinant-one matrix in canonical sign.
///
/// Of the two lifts {m, -m} the canonical one has its first nonzero entry, in
/// the scan order a11, a12, a21, a22, in the positive half of F_q^*.
class ProjMat2 {
 public:
  using Entries = std::array<FiniteField::Code, 4>;

  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] const Entries& entries() const { return e_; }
  [[nodiscard]] FiniteField::Code operator[](std::size_t i) const { return e_[i]; }
  [[nodiscard]] FiniteField::Code trace() const { return field_->add(e_[0], e_[3]); }
  [[nodiscard]] bool is_identity() const;
  // [[a11, a12], [a21, a22]] with entries formatted by the field.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ProjMat2& a, const ProjMat2& b);
  friend bool operator<(const ProjMat2& a, const ProjMat2& b) { return a.e_ < b.e_; }

 private:
  friend ProjMat2 canonicalize(const FieldPtr& field, const Entries& m);
  friend class FiniteGroup;
  ProjMat2(FieldPtr field, Entries e) : field_(std::move(field)), e_(e) {}

  FieldPtr field_;
  Entries e_;
};

// Canonical representative of {m, -m}. Throws DomainError if det(m) != 1.
ProjMat2 canonicalize(const FieldPtr& field, const ProjMat2::Entries& m);
// Integer entries reduced into F_p (prime fields) or read as field codes.
ProjMat2 make_proj(const FieldPtr& field, long long a11, long long a12, long long a21, long long a22);
ProjMat2 proj_identity(const FieldPtr& field);

ProjMat2 proj_mul(const ProjMat2& a, const ProjMat2& b);
ProjMat2 proj_inverse(const ProjMat2& m);
ProjMat2 proj_pow(const ProjMat2& m, long long n);
// Nonidentity with trace +-2.
bool is_parabolic(const ProjMat2& m);
std::size_t element_order(const ProjMat2& m);

// q(q^2-1)/gcd(2, q-1)
std::uint64_t psl2_order(std::uint64_t q);

inline constexpr std::size_t kMaxGroupOrder = 1'000'000;

/// PSL(2, q) enumerated in lexicographic order of canonical entry codes.
///
/// Small groups over prime fields carry a full Cayley table built with the
/// batched matrix kernels; otherwise products go through field arithmetic
/// and a canonical-form hash.
class FiniteGroup final : public Group {
 public:
  [[nodiscard]] std::size_t order() const override { return elements_.size(); }
  [[nodiscard]] ElementId identity() const override { return identity_; }
  [[nodiscard]] ElementId mul(ElementId a, ElementId b) const override;
  [[nodiscard]] ElementId inverse(ElementId a) const override { return inverse_[a]; }
  [[nodiscard]] std::vector<ElementId> generators() const override { return generators_; }

  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] std::uint64_t q() const { return field_->order(); }
  [[nodiscard]] ProjMat2 element(ElementId id) const;
  // Throws DomainError if m is over another field.
  [[nodiscard]] ElementId id_of(const ProjMat2& m) const;
  [[nodiscard]] bool has_cayley_table() const { return !table_.empty(); }

 private:
  friend std::shared_ptr<const FiniteGroup> enumerate_group(const FieldPtr& field);
  explicit FiniteGroup(FieldPtr field) : field_(std::move(field)) {}
  [[nodiscard]] std::uint64_t key(const ProjMat2::Entries& e) const;
  [[nodiscard]] ElementId lookup(const ProjMat2::Entries& canonical) const;
  void build_cayley_table();

  FieldPtr field_;
  std::vector<ProjMat2::Entries> elements_;
  std::unordered_map<std::uint64_t, ElementId> index_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> table_;
  std::vector<ElementId> generators_;
  ElementId identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Throws CapacityError when |PSL(2,q)| exceeds kMaxGroupOrder.
GroupPtr enumerate_group(const FieldPtr& field);
GroupPtr enumerate_group(std::uint64_t p, int degree = 1);

// [[1,1],[0,1]] and [[1,0],[1,1]].
ProjMat2 unipotent_upper(const FieldPtr& field);
ProjMat2 unipotent_lower(const FieldPtr& field);

}  // namespace cuspcert
