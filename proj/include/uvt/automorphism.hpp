#ifndef UVT_AUTOMORPHISM_HPP
#define UVT_AUTOMORPHISM_HPP

// Automorphism groups of graphs by individualization-refinement.
//
// The first path of the search tree always individualizes the least vertex
// of the first smallest non-singleton cell. For each level (deepest first)
// and each vertex w of that level's target cell not yet known to be in the
// orbit of the first-path choice, a backtracking search looks for a leaf
// whose alignment with the first leaf is an automorphism. Refinement is
// label-independent, so a trace hash prunes branches that cannot be images
// of the first path.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "uvt/graph.hpp"
#include "uvt/perm_group.hpp"

namespace uvt {

struct OrderedPartition {
  std::vector<std::vector<int>> cells;  // each cell sorted ascending

  static OrderedPartition unit(std::size_t n) {
    OrderedPartition p;
    if (n == 0) return p;
    p.cells.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i) p.cells[0][i] = static_cast<int>(i);
    return p;
  }

  bool discrete() const {
    return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
  }

  std::vector<std::size_t> cell_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& c : cells) s.push_back(c.size());
    return s;
  }

  /// Index of the first smallest non-singleton cell, or -1 when discrete.
  long target_cell() const {
    long best = -1;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (best < 0 || cells[i].size() < cells[best].size())) best = static_cast<long>(i);
    return best;
  }
};

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

/// Splits cells until equitable. Cells flagged in `pending` are used as
/// splitters (smallest index first); returns a hash of the split events.
inline std::uint64_t refine_in_place(const Graph& g, OrderedPartition& p, std::vector<char>& pending) {
  std::uint64_t trace = 0x12345;
  std::vector<int> count(g.order(), 0);
  for (;;) {
    auto it = std::find(pending.begin(), pending.end(), 1);
    if (it == pending.end()) break;
    const std::size_t w = static_cast<std::size_t>(it - pending.begin());
    *it = 0;
    Graph::Row splitter;
    for (int v : p.cells[w]) splitter.set(v);

    for (std::size_t x = 0; x < p.cells.size(); ++x) {
      auto& cell = p.cells[x];
      if (cell.size() == 1) continue;
      bool uniform = true;
      for (int v : cell) {
        count[v] = static_cast<int>((g.row(v) & splitter).count());
        if (count[v] != count[cell.front()]) uniform = false;
      }
      if (uniform) continue;
      std::vector<int> sorted = cell;
      std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) { return count[a] < count[b]; });
      std::vector<std::vector<int>> fragments;
      for (int v : sorted) {
        if (fragments.empty() || count[fragments.back().front()] != count[v]) fragments.emplace_back();
        fragments.back().push_back(v);
      }
      trace = mix(trace, (static_cast<std::uint64_t>(w) << 40) | (static_cast<std::uint64_t>(x) << 20) | fragments.size());
      for (auto& f : fragments) {
        std::sort(f.begin(), f.end());
        trace = mix(trace, (static_cast<std::uint64_t>(count[f.front()]) << 20) | f.size());
      }
      const std::size_t parts = fragments.size();
      p.cells.erase(p.cells.begin() + static_cast<long>(x));
      p.cells.insert(p.cells.begin() + static_cast<long>(x), fragments.begin(), fragments.end());
      pending.insert(pending.begin() + static_cast<long>(x) + 1, parts - 1, 1);
      pending[x] = 1;
      x += parts - 1;
    }
  }
  trace = mix(trace, p.cells.size());
  return trace;
}

/// Puts v in a singleton cell directly before the rest of cell `index`, then refines.
inline std::uint64_t individualize(const Graph& g, OrderedPartition& p, std::size_t index, int v) {
  auto& cell = p.cells[index];
  cell.erase(std::find(cell.begin(), cell.end(), v));
  p.cells.insert(p.cells.begin() + static_cast<long>(index), std::vector<int>{v});
  std::vector<char> pending(p.cells.size(), 0);
  pending[index] = 1;
  pending[index + 1] = 1;
  return mix(refine_in_place(g, p, pending), index);
}

struct PathNode {
  OrderedPartition partition;
  std::uint64_t trace = 0;
  long target = -1;
  int chosen = -1;
};

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : g_(g) {}

  std::vector<Perm> run() {
    const std::size_t n = g_.order();
    if (n <= 1) return {};
    PathNode root;
    root.partition = OrderedPartition::unit(n);
    std::vector<char> pending(root.partition.cells.size(), 1);
    root.trace = refine_in_place(g_, root.partition, pending);
    path_.push_back(root);
    while (!path_.back().partition.discrete()) {
      auto& node = path_.back();
      node.target = node.partition.target_cell();
      node.chosen = node.partition.cells[node.target].front();
      PathNode child;
      child.partition = node.partition;
      child.trace = individualize(g_, child.partition, node.target, node.chosen);
      path_.push_back(std::move(child));
    }
    first_leaf_ = leaf_order(path_.back().partition);

    for (std::size_t level = path_.size() - 1; level-- > 0;) {
      const auto& node = path_[level];
      const auto cell = node.partition.cells[node.target];
      for (int w : cell) {
        if (w == node.chosen || same_orbit(node.chosen, w)) continue;
        OrderedPartition q = node.partition;
        auto trace = individualize(g_, q, node.target, w);
        if (trace != path_[level + 1].trace || q.cell_sizes() != path_[level + 1].partition.cell_sizes()) continue;
        if (auto gamma = descend(q, level + 1)) generators_.push_back(std::move(*gamma));
      }
    }
    return generators_;
  }

 private:
  static std::vector<int> leaf_order(const OrderedPartition& p) {
    std::vector<int> order;
    for (const auto& c : p.cells) order.push_back(c.front());
    return order;
  }

  bool same_orbit(int a, int b) const {
    DisjointSets ds(g_.order());
    for (const auto& s : generators_)
      for (std::size_t i = 0; i < g_.order(); ++i) ds.unite(i, s[i]);
    return ds.find(a) == ds.find(b);
  }

  std::optional<Perm> descend(const OrderedPartition& q, std::size_t depth) {
    if (q.discrete()) {
      auto leaf = leaf_order(q);
      std::vector<int> img(g_.order());
      for (std::size_t i = 0; i < leaf.size(); ++i) img[first_leaf_[i]] = leaf[i];
      Perm gamma = Perm::from_images(img);
      if (is_automorphism(g_, gamma)) return gamma;
      return std::nullopt;
    }
    const auto& reference = path_[depth];
    long target = q.target_cell();
    if (target != reference.target) return std::nullopt;
    for (int u : q.cells[target]) {
      OrderedPartition next = q;
      auto trace = individualize(g_, next, target, u);
      if (trace != path_[depth + 1].trace || next.cell_sizes() != path_[depth + 1].partition.cell_sizes()) continue;
      if (auto gamma = descend(next, depth + 1)) return gamma;
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::vector<PathNode> path_;
  std::vector<int> first_leaf_;
  std::vector<Perm> generators_;
};

}  // namespace detail

/// Coarsest equitable refinement of p.
inline OrderedPartition refine(const Graph& g, OrderedPartition p) {
  std::vector<char> pending(p.cells.size(), 1);
  detail::refine_in_place(g, p, pending);
  return p;
}

/// Generators of Aut(g), in the deterministic order they are discovered.
inline std::vector<Perm> automorphism_generators(const Graph& g) {
  return detail::AutomorphismSearch(g).run();
}

inline PermGroup automorphism_group(const Graph& g) {
  return PermGroup(g.order(), automorphism_generators(g));
}

}  // namespace uvt

#endif  // UVT_AUTOMORPHISM_HPP
