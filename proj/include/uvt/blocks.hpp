#ifndef UVT_BLOCKS_HPP
#define UVT_BLOCKS_HPP

// Blocks of imprimitivity: minimal blocks, enumeration of all block systems,
// and the induced action on a block system (quotient, fixer, lifts).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uvt/perm_group.hpp"

namespace uvt {

inline constexpr std::size_t kBlockDegreeCap = 32;

class BlockSystem {
 public:
  BlockSystem() = default;

  /// Normalizes: each block sorted, blocks ordered by least point.
  BlockSystem(std::size_t degree, std::vector<std::vector<std::size_t>> blocks) : index_(degree, 0) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    std::vector<bool> seen(degree, false);
    std::size_t size = blocks.empty() ? 0 : blocks.front().size();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].size() != size || size == 0) throw std::invalid_argument("blocks must be non-empty and equal-sized");
      for (auto p : blocks[i]) {
        if (p >= degree || seen[p]) throw std::invalid_argument("blocks must partition the point set");
        seen[p] = true;
        index_[p] = i;
      }
    }
    if (std::count(seen.begin(), seen.end(), true) != static_cast<long>(degree))
      throw std::invalid_argument("blocks must cover every point");
    blocks_ = std::move(blocks);
  }

  std::size_t degree() const noexcept { return index_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block_size() const noexcept { return blocks_.empty() ? 0 : blocks_.front().size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t point) const { return index_[point]; }

  bool is_trivial() const { return block_size() <= 1 || block_count() <= 1; }

  /// Block permutation induced by p, or nullopt if p does not map blocks to blocks.
  std::optional<Perm> induced(const Perm& p) const {
    std::vector<int> img(block_count());
    for (std::size_t b = 0; b < block_count(); ++b) {
      auto target = index_[p[blocks_[b].front()]];
      for (auto x : blocks_[b])
        if (index_[p[x]] != target) return std::nullopt;
      img[b] = static_cast<int>(target);
    }
    try {
      return Perm::from_images(img);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }

  bool is_invariant_under(const PermGroup& g) const {
    return std::all_of(g.generators().begin(), g.generators().end(),
                       [&](const Perm& p) { return induced(p).has_value(); });
  }

  friend bool operator==(const BlockSystem& a, const BlockSystem& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> index_;
};

namespace detail {

/// Finest G-invariant partition in which every given pair shares a class.
inline std::vector<std::size_t> invariant_closure(const PermGroup& g,
                                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  DisjointSets ds(g.degree());
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  for (auto [a, b] : pairs)
    if (ds.unite(a, b)) queue.emplace_back(a, b);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [a, b] = queue[i];
    for (const auto& s : g.generators()) {
      auto x = s[a];
      auto y = s[b];
      if (ds.unite(x, y)) queue.emplace_back(x, y);
    }
  }
  std::vector<std::size_t> cls(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) cls[i] = ds.find(i);
  return cls;
}

inline BlockSystem partition_from_classes(const std::vector<std::size_t>& cls) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<long> slot(cls.size(), -1);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (slot[cls[i]] < 0) {
      slot[cls[i]] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[cls[i]]].push_back(i);
  }
  return BlockSystem(cls.size(), std::move(blocks));
}

}  // namespace detail

/// Smallest block containing both points.
inline std::vector<std::size_t> minimal_block(const PermGroup& g, std::size_t a, std::size_t b) {
  if (!g.is_transitive()) throw std::invalid_argument("minimal_block needs a transitive group");
  auto cls = detail::invariant_closure(g, {{a, b}});
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (cls[i] == cls[a]) block.push_back(i);
  return block;
}

/// Block system generated by the smallest block containing a and b.
inline BlockSystem minimal_block_system(const PermGroup& g, std::size_t a, std::size_t b) {
  if (!g.is_transitive()) throw std::invalid_argument("minimal_block needs a transitive group");
  return detail::partition_from_classes(detail::invariant_closure(g, {{a, b}}));
}

/// Every nontrivial block system, ordered by block size and then by blocks.
/// Blocks through point 0 are unions of point-stabilizer orbits; each is the
/// join of minimal blocks {0, b}, so the lattice is generated by closing the
/// minimal blocks (one per stabilizer orbit) under joins.
inline std::vector<BlockSystem> all_block_systems(const PermGroup& g, std::size_t degree_cap = kBlockDegreeCap) {
  const std::size_t n = g.degree();
  if (n > degree_cap) throw CapacityError("block system search limited to degree " + std::to_string(degree_cap));
  if (!g.is_transitive()) throw std::invalid_argument("all_block_systems needs a transitive group");
  if (n <= 2) return {};

  std::set<std::vector<std::size_t>> found;  // blocks containing 0
  std::vector<std::vector<std::size_t>> frontier;
  auto add = [&](std::vector<std::size_t> block) {
    if (block.size() <= 1 || block.size() >= n) return;
    if (found.insert(block).second) frontier.push_back(std::move(block));
  };
  auto stab = g.point_stabilizer(0);
  for (const auto& orbit : stab.orbits()) {
    if (orbit.front() == 0 && orbit.size() == 1) continue;
    add(minimal_block(g, 0, orbit.front() == 0 ? orbit[1] : orbit.front()));
  }
  std::vector<std::vector<std::size_t>> minimal(found.begin(), found.end());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    auto current = frontier[i];
    for (const auto& m : minimal) {
      if (std::includes(current.begin(), current.end(), m.begin(), m.end())) continue;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (auto x : current) pairs.emplace_back(0, x);
      for (auto x : m) pairs.emplace_back(0, x);
      auto cls = detail::invariant_closure(g, pairs);
      std::vector<std::size_t> join;
      for (std::size_t p = 0; p < n; ++p)
        if (cls[p] == cls[0]) join.push_back(p);
      add(std::move(join));
    }
  }
  std::vector<BlockSystem> out;
  for (const auto& block : found) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto x : block) pairs.emplace_back(0, x);
    out.push_back(detail::partition_from_classes(detail::invariant_closure(g, pairs)));
  }
  std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size() != b.block_size()) return a.block_size() < b.block_size();
    return a.blocks() < b.blocks();
  });
  return out;
}

/// Induced action of G on a block system.
class QuotientAction {
 public:
  QuotientAction(const PermGroup& g, BlockSystem system) : system_(std::move(system)) {
    if (system_.degree() != g.degree() || !system_.is_invariant_under(g))
      throw std::invalid_argument("partition is not a block system of the group");
    const std::size_t n = g.degree();
    const std::size_t m = system_.block_count();
    if (n + m > kMaxDegree) throw CapacityError("degree too large for block quotient");

    // G acting on points and blocks at once; with the block points first in
    // the base, the stabilizer below them is the fixer.
    std::vector<Perm> combined;
    std::vector<Perm> quotient_gens;
    for (const auto& s : g.generators()) {
      auto q = *system_.induced(s);
      std::vector<int> img(n + m);
      for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(s[i]);
      for (std::size_t b = 0; b < m; ++b) img[n + b] = static_cast<int>(n + q[b]);
      combined.push_back(Perm::from_images(img));
      quotient_gens.push_back(std::move(q));
    }
    std::vector<std::size_t> prefix(m);
    for (std::size_t b = 0; b < m; ++b) prefix[b] = n + b;
    combined_ = PermGroup(n + m, std::move(combined), prefix);
    quotient_ = PermGroup(m, std::move(quotient_gens));

    std::vector<Perm> fixer_gens;
    if (combined_.chain().size() > m)
      for (const auto& s : combined_.chain()[m].strong_generators) fixer_gens.push_back(restrict_to_points(s, n));
    fixer_ = PermGroup(n, std::move(fixer_gens));
    if (quotient_.order() * fixer_.order() != g.order())
      throw std::logic_error("block quotient: |quotient| * |fixer| != |G|");
  }

  const BlockSystem& system() const noexcept { return system_; }
  const PermGroup& quotient() const noexcept { return quotient_; }
  const PermGroup& fixer() const noexcept { return fixer_; }

  /// An element of G inducing q on the blocks.
  Perm lift(const Perm& q) const {
    const std::size_t n = system_.degree();
    const std::size_t m = system_.block_count();
    if (q.degree() != m) throw DegreeMismatch(q.degree(), m);
    std::vector<std::size_t> targets(m);
    for (std::size_t b = 0; b < m; ++b) targets[b] = n + q[b];
    auto g = combined_.element_with_base_images(targets);
    if (!g) throw std::invalid_argument("block permutation is not in the quotient");
    auto lifted = restrict_to_points(*g, n);
    if (*system_.induced(lifted) != q) throw std::logic_error("lift does not induce the requested block action");
    return lifted;
  }

 private:
  static Perm restrict_to_points(const Perm& p, std::size_t n) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(p[i]);
    return Perm::from_images(img);
  }

  BlockSystem system_;
  PermGroup combined_;
  PermGroup quotient_;
  PermGroup fixer_;
};

inline QuotientAction block_quotient(const PermGroup& g, const BlockSystem& system) {
  return QuotientAction(g, system);
}

}  // namespace uvt

#endif  // UVT_BLOCKS_HPP
