#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cuspcert {

using ElementId = std::uint32_t;

/// A finite group whose elements are the ids 0..order()-1.
///
/// Implementations are immutable after construction and safe to read from
/// several threads.
class Group {
 public:
  virtual ~Group() = default;

  [[nodiscard]] virtual std::size_t order() const = 0;
  [[nodiscard]] virtual ElementId identity() const = 0;
  [[nodiscard]] virtual ElementId mul(ElementId a, ElementId b) const = 0;
  [[nodiscard]] virtual ElementId inverse(ElementId a) const = 0;
  // A generating set; the default picks one greedily by ascending id.
  [[nodiscard]] virtual std::vector<ElementId> generators() const;

  // x g x^-1
  [[nodiscard]] ElementId conjugate(ElementId g, ElementId x) const { return mul(mul(x, g), inverse(x)); }
  [[nodiscard]] ElementId pow(ElementId g, long long n) const;
  [[nodiscard]] std::size_t element_order(ElementId g) const;
};

/// Group given by an explicit multiplication table (row a, column b holds a*b).
class TableGroup final : public Group {
 public:
  // Validates closure, identity and inverses; associativity is the caller's
  // responsibility.
  TableGroup(std::size_t order, std::vector<ElementId> table);

  static TableGroup cyclic(std::size_t n);
  // Symmetries of the n-gon, order 2n: ids r^k (k < n) then s r^k.
  static TableGroup dihedral(std::size_t n);

  [[nodiscard]] std::size_t order() const override { return n_; }
  [[nodiscard]] ElementId identity() const override { return identity_; }
  [[nodiscard]] ElementId mul(ElementId a, ElementId b) const override { return table_[a * n_ + b]; }
  [[nodiscard]] ElementId inverse(ElementId a) const override { return inverse_[a]; }

 private:
  std::size_t n_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  ElementId identity_ = 0;
};

/// Subgroup as a sorted set of element ids, with an O(1) membership mask.
class Subgroup {
 public:
  Subgroup() = default;
  // ids need not be sorted; duplicates are removed. No closure check.
  Subgroup(std::size_t group_order, std::vector<ElementId> ids);

  [[nodiscard]] std::size_t order() const { return ids_.size(); }
  [[nodiscard]] const std::vector<ElementId>& ids() const { return ids_; }
  [[nodiscard]] bool contains(ElementId g) const { return (mask_[g >> 6] >> (g & 63)) & 1U; }
  [[nodiscard]] const std::vector<std::uint64_t>& mask() const { return mask_; }
  // Generators recorded when the subgroup was built by closure.
  [[nodiscard]] const std::vector<ElementId>& generators() const { return generators_; }
  void set_generators(std::vector<ElementId> gens) { generators_ = std::move(gens); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.ids_ == b.ids_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  std::vector<ElementId> ids_;
  std::vector<std::uint64_t> mask_;
  std::vector<ElementId> generators_;
};

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

// Smallest subgroup containing gens, by breadth-first closure.
Subgroup subgroup_closure(const Group& g, std::span<const ElementId> gens);
// As above but gives up (nullopt) once more than limit elements are found.
std::optional<Subgroup> subgroup_closure_bounded(const Group& g, std::span<const ElementId> gens, std::size_t limit);

// Closure, identity and inverse membership.
bool is_subgroup(const Group& g, const Subgroup& h);
bool is_normal(const Group& g, const Subgroup& h);
// x H x^-1
Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, ElementId x);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Partition of a group into conjugacy classes.
///
/// Class 0 is the identity class; the remaining classes are ordered by their
/// smallest member id, which is also the stored representative.
struct ConjClassTable {
  std::vector<std::uint32_t> class_of;
  std::vector<ElementId> representatives;
  std::vector<std::size_t> sizes;

  [[nodiscard]] std::size_t count() const { return representatives.size(); }
};

ConjClassTable conjugacy_classes(const Group& g);

// Least common multiple of the element orders.
std::size_t group_exponent(const Group& g);

}  // namespace cuspcert
