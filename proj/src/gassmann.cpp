#include "cuspcert/gassmann.hpp"

#include <algorithm>
#include <unordered_set>

#include "cuspcert/error.hpp"

namespace cuspcert {

namespace {

struct MaskHash {
  std::size_t operator()(const std::vector<std::uint64_t>& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : m) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const Group& g, std::optional<std::size_t> order_filter) {
  const std::size_t n = g.order();
  if (n > kMaxSubgroupSearchOrder) throw CapacityError("subgroup enumeration limited to groups of order <= 1000");
  if (order_filter && (*order_filter == 0 || n % *order_filter != 0)) return {};
  const std::size_t bound = order_filter.value_or(n);
  auto admissible = [&](std::size_t order) { return bound % order == 0; };

  // The hash set keys on the membership mask; equal masks are equal sets, so
  // no separate collision confirmation is needed beyond vector equality.
  std::unordered_set<std::vector<std::uint64_t>, MaskHash> seen;
  std::vector<Subgroup> found;
  std::vector<std::size_t> frontier;
  auto offer = [&](Subgroup h) {
    if (!admissible(h.order())) return;
    if (!seen.insert(h.mask()).second) return;
    frontier.push_back(found.size());
    found.push_back(std::move(h));
  };

  offer(trivial_subgroup(g));
  for (ElementId x = 0; x < n; ++x) {
    const ElementId gens[] = {x};
    if (auto h = subgroup_closure_bounded(g, gens, bound)) offer(std::move(*h));
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> layer;
    layer.swap(frontier);
    for (std::size_t idx : layer) {
      const Subgroup h = found[idx];
      if (h.order() == bound) continue;
      std::vector<ElementId> gens = h.generators();
      gens.push_back(0);
      for (ElementId x = 0; x < n; ++x) {
        if (h.contains(x)) continue;
        gens.back() = x;
        if (auto k = subgroup_closure_bounded(g, gens, bound)) offer(std::move(*k));
      }
    }
  }

  std::vector<Subgroup> out;
  for (auto& h : found)
    if (!order_filter || h.order() == *order_filter) out.push_back(std::move(h));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupClass> subgroup_conjugacy_classes(const Group& g, const std::vector<Subgroup>& subs) {
  std::vector<SubgroupClass> classes;
  std::vector<bool> assigned(subs.size(), false);
  std::vector<std::size_t> order(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return subs[a] < subs[b]; });
  const auto gens = g.generators();
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t i = order[oi];
    if (assigned[i]) continue;
    // Orbit of subs[i] under conjugation by the group's generators.
    std::vector<Subgroup> orbit{subs[i]};
    std::unordered_set<std::vector<std::uint64_t>, MaskHash> seen{subs[i].mask()};
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (auto s : gens) {
        Subgroup c = conjugate_subgroup(g, orbit[k], s);
        if (seen.insert(c.mask()).second) orbit.push_back(std::move(c));
      }
    SubgroupClass cls{subs[i], {}};
    for (std::size_t j = 0; j < subs.size(); ++j)
      if (!assigned[j] && seen.contains(subs[j].mask())) {
        assigned[j] = true;
        cls.members.push_back(subs[j]);
      }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    classes.push_back(std::move(cls));
  }
  return classes;
}

IntersectionVector intersection_vector(const ConjClassTable& classes, const Subgroup& h) {
  IntersectionVector v{std::vector<std::size_t>(classes.count(), 0)};
  for (auto x : h.ids()) ++v.counts[classes.class_of[x]];
  return v;
}

std::optional<ElementId> find_conjugator(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool maps = true;
    for (auto h : a.ids())
      if (!b.contains(g.conjugate(h, x))) {
        maps = false;
        break;
      }
    if (maps) return x;
  }
  return std::nullopt;
}

std::vector<GassmannPair> find_gassmann_pairs(const Group& g, std::size_t index) {
  if (index == 0 || g.order() % index != 0) return {};
  const std::size_t target = g.order() / index;
  const auto classes = subgroup_conjugacy_classes(g, enumerate_subgroups(g, target));
  const auto cc = conjugacy_classes(g);
  std::vector<IntersectionVector> vectors;
  for (const auto& c : classes) vectors.push_back(intersection_vector(cc, c.representative));
  std::vector<GassmannPair> pairs;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (!(vectors[i] == vectors[j])) continue;
      const auto& a = classes[i].representative;
      const auto& b = classes[j].representative;
      if (find_conjugator(g, a, b)) throw InternalError("distinct conjugacy classes share a conjugator");
      pairs.push_back({a, b, vectors[i], g.order()});
    }
  std::sort(pairs.begin(), pairs.end(), [](const GassmannPair& x, const GassmannPair& y) {
    if (x.first.order() != y.first.order()) return x.first.order() < y.first.order();
    return x.first.ids().front() < y.first.ids().front();
  });
  return pairs;
}

}  // namespace cuspcert
