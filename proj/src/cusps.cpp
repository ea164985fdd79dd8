#include "cuspcert/cusps.hpp"

#include <algorithm>
#include <numeric>

#include "cuspcert/error.hpp"
#include "cuspcert/psl2.hpp"

namespace cuspcert {

std::vector<DoubleCoset> double_cosets(const Group& g, const Subgroup& h, const Subgroup& p) {
  // Orbits of H acting on the left cosets xP: sweep ids upward, so the first
  // unvisited element is the minimum of its double coset.
  std::vector<bool> visited(g.order(), false);
  std::vector<DoubleCoset> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (visited[x]) continue;
    std::size_t size = 0;
    for (auto a : h.ids()) {
      const ElementId ax = g.mul(a, x);
      for (auto b : p.ids()) {
        const ElementId y = g.mul(ax, b);
        if (!visited[y]) {
          visited[y] = true;
          ++size;
        }
      }
    }
    out.push_back({x, size});
  }
  return out;
}

std::size_t CuspDecomposition::local_degree_sum() const {
  return std::accumulate(entries.begin(), entries.end(), std::size_t{0},
                         [](std::size_t acc, const CuspEntry& e) { return acc + e.local_degree; });
}

CuspDecomposition cusp_decomposition(const Group& g, const Subgroup& h, const Subgroup& p) {
  CuspDecomposition d{g.order(), h.order(), p.order(), {}};
  for (const auto& dc : double_cosets(g, h, p)) {
    const ElementId x = dc.representative;
    // |P ∩ x^-1 H x|: b lies in x^-1 H x iff x b x^-1 lies in H.
    std::size_t stab = 0;
    for (auto b : p.ids())
      if (h.contains(g.conjugate(b, x))) ++stab;
    const std::size_t local = p.order() / stab;
    if (dc.size % h.order() != 0 || dc.size / h.order() != local)
      throw InternalError("double coset size disagrees with |H| [P : P ∩ g^-1 H g]");
    d.entries.push_back({x, local, dc.size / h.order()});
  }
  if (d.local_degree_sum() != d.index())
    throw InternalError("local degrees sum to " + std::to_string(d.local_degree_sum()) + ", not [G:H] = " +
                        std::to_string(d.index()));
  return d;
}

CuspPersistence cusp_persistence(const Group& g, const Subgroup& h, const Subgroup& p) {
  CuspPersistence c;
  c.single_double_coset = double_cosets(g, h, p).size() == 1;
  c.index_matches = g.order() / h.order() == p.order() / intersect(p, h).order();
  std::vector<bool> hit(g.order(), false);
  std::size_t covered = 0;
  for (auto a : h.ids())
    for (auto b : p.ids()) {
      const ElementId y = g.mul(a, b);
      if (!hit[y]) {
        hit[y] = true;
        ++covered;
      }
    }
  c.product_covers = covered == g.order();
  if (c.single_double_coset != c.index_matches || c.index_matches != c.product_covers)
    throw InternalError("cusp persistence characterizations disagree");
  return c;
}

bool cusp_remains(const Group& g, const Subgroup& h, const Subgroup& p) { return cusp_persistence(g, h, p).remains(); }

std::size_t normal_cover_cusp_count(const Group& g, const Subgroup& p) {
  const std::size_t count = g.order() / p.order();
  if (cusp_decomposition(g, trivial_subgroup(g), p).cusp_count() != count)
    throw InternalError("normal cover cusp count disagrees with its decomposition");
  return count;
}

std::vector<ElementId> right_transversal(const Group& g, const Subgroup& p, const Subgroup& h) {
  const Subgroup k = intersect(p, h);
  std::vector<bool> covered(g.order(), false);
  std::vector<ElementId> reps;
  for (auto x : p.ids()) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (auto a : k.ids()) covered[g.mul(a, x)] = true;
  }
  return reps;
}

bool common_transversal_check(const Group& g, const Subgroup& h, const Subgroup& p,
                              const std::vector<ElementId>& transversal) {
  if (!cusp_remains(g, h, p)) throw DomainError("common transversal check requires a single double coset");
  // Right cosets Hx; label each by its smallest element.
  std::vector<ElementId> labels;
  for (auto x : transversal) {
    ElementId m = static_cast<ElementId>(-1);
    for (auto a : h.ids()) m = std::min(m, g.mul(a, x));
    labels.push_back(m);
  }
  std::sort(labels.begin(), labels.end());
  const bool distinct = std::adjacent_find(labels.begin(), labels.end()) == labels.end();
  return distinct && labels.size() == g.order() / h.order();
}

bool common_transversal_check(const Group& g, const Subgroup& h, const Subgroup& p) {
  return common_transversal_check(g, h, p, right_transversal(g, p, h));
}

CuspBound cusp_lower_bound_check(std::uint64_t q, std::uint64_t peripheral_order) {
  if (peripheral_order == 0 || peripheral_order > q * (q - 1) / 2)
    throw DomainError("peripheral image order " + std::to_string(peripheral_order) + " exceeds the bound q(q-1)/2");
  const std::uint64_t group = psl2_order(q);
  if (group % peripheral_order != 0) throw DomainError("peripheral image order does not divide |PSL(2,q)|");
  const std::uint64_t count = group / peripheral_order;
  return {count, q + 1, count >= q + 1};
}

}  // namespace cuspcert
