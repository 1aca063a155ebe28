#ifndef UVT_ORBITAL_HPP
#define UVT_ORBITAL_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uvt/graph.hpp"
#include "uvt/perm_group.hpp"

namespace uvt {

inline constexpr std::size_t kOrbitalDegreeCap = 32;
inline constexpr std::size_t kOrbitalClassCap = 20;

/// Orbits of G on unordered pairs {u, v}, u != v (an orbital merged with its
/// paired orbital). Classes ordered by their least pair.
inline std::vector<std::vector<std::pair<int, int>>> symmetrized_orbitals(const PermGroup& g) {
  const std::size_t n = g.degree();
  DisjointSets ds(n * n);
  for (const auto& s : g.generators())
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v) ds.unite(u * n + v, s[u] * n + s[v]);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) ds.unite(u * n + v, v * n + u);

  std::vector<std::vector<std::pair<int, int>>> classes;
  std::vector<long> slot(n * n, -1);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      auto r = ds.find(u * n + v);
      if (slot[r] < 0) {
        slot[r] = static_cast<long>(classes.size());
        classes.emplace_back();
      }
      classes[slot[r]].emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  return classes;
}

/// Every simple graph on the points of G that G acts on by automorphisms:
/// the 2^c unions of symmetrized orbital classes, in bitmask order (graph i
/// contains class j iff bit j of i is set).
inline std::vector<Graph> orbital_union_graphs(const PermGroup& g, std::size_t degree_cap = kOrbitalDegreeCap,
                                               std::size_t class_cap = kOrbitalClassCap) {
  if (g.degree() > degree_cap) throw CapacityError("orbital enumeration limited to degree " + std::to_string(degree_cap));
  if (!g.is_transitive()) throw std::invalid_argument("orbital_union_graphs needs a transitive group");
  auto classes = symmetrized_orbitals(g);
  if (classes.size() > class_cap)
    throw CapacityError(std::to_string(classes.size()) + " orbital classes exceed cap " + std::to_string(class_cap));
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << classes.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph h(g.degree());
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (mask >> c & 1)
        for (auto [u, v] : classes[c]) h.add_edge(u, v);
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace uvt

#endif  // UVT_ORBITAL_HPP
