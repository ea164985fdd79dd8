#include "cuspcert/group.hpp"

#include <algorithm>
#include <numeric>

#include "cuspcert/error.hpp"

namespace cuspcert {

std::vector<ElementId> Group::generators() const {
  std::vector<ElementId> gens;
  Subgroup current = trivial_subgroup(*this);
  for (ElementId g = 0; g < order() && current.order() < order(); ++g) {
    if (current.contains(g)) continue;
    gens.push_back(g);
    current = subgroup_closure(*this, gens);
  }
  return gens;
}

ElementId Group::pow(ElementId g, long long n) const {
  if (n < 0) {
    g = inverse(g);
    n = -n;
  }
  ElementId r = identity();
  while (n) {
    if (n & 1) r = mul(r, g);
    g = mul(g, g);
    n >>= 1;
  }
  return r;
}

std::size_t Group::element_order(ElementId g) const {
  std::size_t n = 1;
  for (ElementId x = g; x != identity(); x = mul(x, g)) ++n;
  return n;
}

TableGroup::TableGroup(std::size_t order, std::vector<ElementId> table) : n_(order), table_(std::move(table)) {
  if (n_ == 0 || table_.size() != n_ * n_) throw DomainError("multiplication table has the wrong shape");
  for (auto v : table_)
    if (v >= n_) throw DomainError("multiplication table entry out of range");
  bool found = false;
  for (ElementId e = 0; e < n_ && !found; ++e) {
    found = true;
    for (ElementId a = 0; a < n_ && found; ++a) found = mul(e, a) == a && mul(a, e) == a;
    if (found) identity_ = e;
  }
  if (!found) throw DomainError("multiplication table has no identity");
  inverse_.assign(n_, 0);
  for (ElementId a = 0; a < n_; ++a) {
    bool ok = false;
    for (ElementId b = 0; b < n_ && !ok; ++b)
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        ok = true;
      }
    if (!ok) throw DomainError("multiplication table element without inverse");
  }
}

TableGroup TableGroup::cyclic(std::size_t n) {
  std::vector<ElementId> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<ElementId>((a + b) % n);
  return {n, std::move(t)};
}

TableGroup TableGroup::dihedral(std::size_t n) {
  // id k < n is r^k, id n + k is s r^k; r^a s = s r^-a.
  const std::size_t order = 2 * n;
  std::vector<ElementId> t(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const bool sx = x >= n;
      const bool sy = y >= n;
      const std::size_t a = x % n;
      const std::size_t b = y % n;
      // (s^sx r^a)(s^sy r^b) = s^(sx+sy) r^(±a + b)
      const std::size_t k = sy ? (b + n - a) % n : (a + b) % n;
      const bool s = sx != sy;
      t[x * order + y] = static_cast<ElementId>(s ? n + k : k);
    }
  }
  return {order, std::move(t)};
}

Subgroup::Subgroup(std::size_t group_order, std::vector<ElementId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  mask_.assign((group_order + 63) / 64, 0);
  for (auto g : ids_) {
    if (g >= group_order) throw DomainError("subgroup member id out of range");
    mask_[g >> 6] |= std::uint64_t{1} << (g & 63);
  }
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.ids_ < b.ids_;
}

Subgroup trivial_subgroup(const Group& g) { return {g.order(), {g.identity()}}; }

Subgroup whole_group(const Group& g) {
  std::vector<ElementId> all(g.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return {g.order(), std::move(all)};
}

std::optional<Subgroup> subgroup_closure_bounded(const Group& g, std::span<const ElementId> gens, std::size_t limit) {
  std::vector<std::uint64_t> seen((g.order() + 63) / 64, 0);
  auto mark = [&](ElementId x) {
    auto& word = seen[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (word & bit) return false;
    word |= bit;
    return true;
  };
  std::vector<ElementId> members{g.identity()};
  mark(g.identity());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ElementId x = members[i];
    for (ElementId s : gens) {
      const ElementId y = g.mul(x, s);
      if (mark(y)) {
        members.push_back(y);
        if (members.size() > limit) return std::nullopt;
      }
    }
  }
  Subgroup h(g.order(), std::move(members));
  h.set_generators({gens.begin(), gens.end()});
  return h;
}

Subgroup subgroup_closure(const Group& g, std::span<const ElementId> gens) {
  return *subgroup_closure_bounded(g, gens, g.order());
}

bool is_subgroup(const Group& g, const Subgroup& h) {
  if (h.order() == 0 || !h.contains(g.identity())) return false;
  for (auto a : h.ids()) {
    if (!h.contains(g.inverse(a))) return false;
    for (auto b : h.ids())
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, ElementId x) {
  std::vector<ElementId> ids;
  ids.reserve(h.order());
  for (auto a : h.ids()) ids.push_back(g.conjugate(a, x));
  return {g.order(), std::move(ids)};
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (ElementId x : g.generators())
    for (auto a : h.ids())
      if (!h.contains(g.conjugate(a, x))) return false;
  return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> ids;
  std::set_intersection(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end(), std::back_inserter(ids));
  return {a.mask().size() * 64, std::move(ids)};
}

ConjClassTable conjugacy_classes(const Group& g) {
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  const std::size_t n = g.order();
  const auto gens = g.generators();
  std::vector<std::uint32_t> raw(n, kUnassigned);
  std::vector<ElementId> reps;
  std::vector<std::size_t> sizes;
  std::vector<ElementId> queue;
  auto flood = [&](ElementId start) {
    const auto cls = static_cast<std::uint32_t>(reps.size());
    reps.push_back(start);
    raw[start] = cls;
    queue.assign(1, start);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto s : gens) {
        const ElementId y = g.conjugate(queue[i], s);
        if (raw[y] == kUnassigned) {
          raw[y] = cls;
          queue.push_back(y);
        }
      }
    sizes.push_back(queue.size());
  };
  flood(g.identity());
  for (ElementId x = 0; x < n; ++x)
    if (raw[x] == kUnassigned) flood(x);
  return {std::move(raw), std::move(reps), std::move(sizes)};
}

std::size_t group_exponent(const Group& g) {
  std::size_t e = 1;
  for (ElementId x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

}  // namespace cuspcert
