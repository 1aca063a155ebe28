#ifndef UVT_PERM_GROUP_HPP
#define UVT_PERM_GROUP_HPP

// Permutation groups given by generators, backed by a stabilizer chain built
// with the deterministic Schreier-Sims algorithm (base points are the smallest
// moved points, after an optional caller-supplied prefix).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "uvt/perm.hpp"

namespace uvt {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultEnumerationCap = 50'000;

/// Raised when an operation would need to list more group elements than allowed.
class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

using PermSet = std::unordered_set<Perm, PermHash>;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// Keeps the smaller root so representatives are the least elements.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

class PermGroup {
 public:
  struct Level {
    std::size_t base_point = 0;
    std::vector<Perm> strong_generators;        // fix all earlier base points
    std::vector<std::size_t> orbit;             // in discovery order
    std::vector<std::optional<Perm>> transversal;  // by point: maps base_point there
  };

  PermGroup() = default;

  /// Trivial group on `degree` points.
  explicit PermGroup(std::size_t degree) : PermGroup(degree, {}) {}

  PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<std::size_t> base_prefix = {})
      : degree_(degree) {
    for (auto& g : generators) {
      if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
      if (!g.is_identity()) generators_.push_back(std::move(g));
    }
    for (auto b : base_prefix)
      if (b >= degree) throw std::out_of_range("base point out of range");
    build(base_prefix);
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const std::vector<Level>& chain() const noexcept { return levels_; }

  std::vector<std::size_t> base() const {
    std::vector<std::size_t> b;
    for (const auto& l : levels_) b.push_back(l.base_point);
    return b;
  }

  BigInt order() const {
    BigInt r = 1;
    for (const auto& l : levels_) r *= l.orbit.size();
    return r;
  }

  /// Order if it fits in 64 bits.
  std::optional<std::uint64_t> order_u64() const {
    std::uint64_t r = 1;
    for (const auto& l : levels_) {
      if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(l.orbit.size()), &r)) return std::nullopt;
    }
    return r;
  }

  std::string order_string() const { return order().str(); }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto [h, depth] = strip(p, 0);
    return depth == levels_.size() && h.is_identity();
  }

  /// Uniform random element (product of random transversal entries).
  template <typename Rng>
  Perm random_element(Rng& rng) const {
    Perm r(degree_);
    for (const auto& l : levels_) {
      std::uniform_int_distribution<std::size_t> pick(0, l.orbit.size() - 1);
      r = compose(r, *l.transversal[l.orbit[pick(rng)]]);
    }
    return r;
  }

  /// Every element exactly once, sorted lexicographically by image array
  /// (so the identity comes first).
  std::vector<Perm> elements(std::size_t cap = kDefaultEnumerationCap) const {
    auto ord = order_u64();
    if (!ord || *ord > cap)
      throw GroupTooLarge("group of order " + order_string() + " exceeds enumeration cap " + std::to_string(cap));
    std::vector<Perm> out;
    out.reserve(*ord);
    std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t level, const Perm& prefix) {
      if (level == levels_.size()) {
        out.push_back(prefix);
        return;
      }
      const auto& l = levels_[level];
      for (auto x : l.orbit) rec(level + 1, compose(prefix, *l.transversal[x]));
    };
    rec(0, Perm(degree_));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Orbit partition; each orbit sorted, orbits ordered by least point.
  std::vector<std::vector<std::size_t>> orbits() const {
    DisjointSets ds(degree_);
    for (const auto& g : generators_)
      for (std::size_t i = 0; i < degree_; ++i) ds.unite(i, g[i]);
    std::vector<std::vector<std::size_t>> out;
    std::vector<long> index(degree_, -1);
    for (std::size_t i = 0; i < degree_; ++i) {
      auto r = ds.find(i);
      if (index[r] < 0) {
        index[r] = static_cast<long>(out.size());
        out.emplace_back();
      }
      out[index[r]].push_back(i);
    }
    return out;
  }

  bool is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

  /// Pointwise stabilizer of the given points, in that order.
  PermGroup stabilizer(const std::vector<std::size_t>& points) const {
    // Prefix points always become the first levels of the rebuilt chain.
    PermGroup rebased(degree_, generators_, points);
    const std::size_t depth = points.size();
    if (depth >= rebased.levels_.size()) return PermGroup(degree_);
    return PermGroup(degree_, rebased.levels_[depth].strong_generators);
  }

  PermGroup point_stabilizer(std::size_t v) const { return stabilizer({v}); }

  /// |G| / degree for a transitive group.
  BigInt stabilizer_order() const {
    if (!is_transitive()) throw std::invalid_argument("stabilizer_order needs a transitive group");
    return order() / degree_;
  }

  bool is_regular() const { return is_transitive() && order() == degree_; }

  /// True iff every generator of `h` lies in this group.
  bool contains_group(const PermGroup& h) const {
    if (h.degree() != degree_) return false;
    return std::all_of(h.generators().begin(), h.generators().end(), [&](const Perm& p) { return contains(p); });
  }

  /// Finds g with g(base[i]) = targets[i] along the chain prefix; used to lift
  /// partial images. Returns nullopt if no such element exists.
  std::optional<Perm> element_with_base_images(const std::vector<std::size_t>& targets) const {
    Perm acc(degree_);
    std::size_t i = 0;
    for (; i < targets.size() && i < levels_.size(); ++i) {
      auto pre = inverse(acc)[targets[i]];
      const auto& t = levels_[i].transversal[pre];
      if (!t) return std::nullopt;
      acc = compose(acc, *t);
    }
    return acc;
  }

 private:
  std::pair<Perm, std::size_t> strip(Perm h, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const auto& lev = levels_[l];
      auto x = h[lev.base_point];
      if (!lev.transversal[x]) return {std::move(h), l};
      h = compose(inverse(*lev.transversal[x]), h);
    }
    return {std::move(h), levels_.size()};
  }

  void recompute_orbit(Level& l) const {
    l.orbit.assign(1, l.base_point);
    l.transversal.assign(degree_, std::nullopt);
    l.transversal[l.base_point] = Perm(degree_);
    for (std::size_t i = 0; i < l.orbit.size(); ++i) {
      auto x = l.orbit[i];
      for (const auto& s : l.strong_generators) {
        auto y = s[x];
        if (!l.transversal[y]) {
          l.transversal[y] = compose(s, *l.transversal[x]);
          l.orbit.push_back(y);
        }
      }
    }
  }

  static std::optional<std::size_t> first_moved_point(const Perm& p) {
    for (std::size_t i = 0; i < p.degree(); ++i)
      if (p[i] != i) return i;
    return std::nullopt;
  }

  void add_level(std::size_t point) {
    Level l;
    l.base_point = point;
    levels_.push_back(std::move(l));
  }

  bool fixes_prefix(const Perm& p, std::size_t count) const {
    for (std::size_t i = 0; i < count; ++i)
      if (p[levels_[i].base_point] != levels_[i].base_point) return false;
    return true;
  }

  void build(const std::vector<std::size_t>& prefix) {
    levels_.clear();
    for (auto b : prefix) add_level(b);
    for (const auto& g : generators_) {
      bool moves_base = false;
      for (const auto& l : levels_)
        if (g[l.base_point] != l.base_point) moves_base = true;
      if (!moves_base) add_level(*first_moved_point(g));
    }
    for (std::size_t i = 0; i < levels_.size(); ++i)
      for (const auto& g : generators_)
        if (fixes_prefix(g, i)) levels_[i].strong_generators.push_back(g);
    for (auto& l : levels_) recompute_orbit(l);

    // Holt's SCHREIERSIMS: walk levels bottom-up, restarting below any level
    // that received a new strong generator.
    std::vector<std::unordered_set<std::uint64_t>> checked(levels_.size());
    std::size_t i = levels_.size();
    while (i > 0) {
      std::size_t level = i - 1;
      bool extended = false;
      auto& lev = levels_[level];
      for (std::size_t oi = 0; oi < lev.orbit.size() && !extended; ++oi) {
        auto x = lev.orbit[oi];
        for (std::size_t si = 0; si < lev.strong_generators.size() && !extended; ++si) {
          std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | si;
          if (checked[level].count(key)) continue;
          const auto& s = lev.strong_generators[si];
          Perm schreier = compose(inverse(*lev.transversal[s[x]]), compose(s, *lev.transversal[x]));
          auto [h, depth] = strip(schreier, level + 1);
          if (depth == levels_.size() && h.is_identity()) {
            checked[level].insert(key);
            continue;
          }
          if (depth == levels_.size()) {
            add_level(*first_moved_point(h));
            checked.emplace_back();
          }
          for (std::size_t l = level + 1; l <= depth; ++l) {
            levels_[l].strong_generators.push_back(h);
            recompute_orbit(levels_[l]);
            checked[l].clear();
          }
          i = depth + 1;
          extended = true;
        }
      }
      if (!extended) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
};

/// Enumerates <gens> by closure, giving up (nullopt) once more than `limit`
/// elements appear. Output sorted.
inline std::optional<std::vector<Perm>> closure_elements(std::size_t degree, const std::vector<Perm>& gens,
                                                         std::size_t limit) {
  PermSet seen;
  std::vector<Perm> queue{Perm(degree)};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Perm next = compose(g, queue[i]);
      if (seen.insert(next).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

/// Action of G on the left cosets of H (H given as a subgroup by generators).
/// Cosets are numbered by their least element in image-array order, so the
/// trivial coset H is point 0. The kernel is not factored out.
struct CosetAction {
  PermGroup group;
  std::vector<Perm> representatives;
  bool faithful = false;
};

inline CosetAction coset_action_detailed(const PermGroup& g, const PermGroup& h,
                                         std::size_t max_degree = kMaxDegree,
                                         std::size_t cap = kDefaultEnumerationCap) {
  if (h.degree() != g.degree() || !g.contains_group(h)) throw std::invalid_argument("H is not a subgroup of G");
  BigInt index = g.order() / h.order();
  if (index > max_degree) throw std::invalid_argument("coset index " + index.str() + " exceeds degree cap");
  auto elems = g.elements(cap);
  auto sub = h.elements(cap);
  std::unordered_map<Perm, std::size_t, PermHash> coset_of;
  CosetAction out;
  for (const auto& e : elems) {
    if (coset_of.count(e)) continue;
    std::size_t id = out.representatives.size();
    out.representatives.push_back(e);
    for (const auto& x : sub) coset_of.emplace(compose(e, x), id);
  }
  const std::size_t m = out.representatives.size();
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) {
    std::vector<int> img(m);
    for (std::size_t c = 0; c < m; ++c) img[c] = static_cast<int>(coset_of.at(compose(x, out.representatives[c])));
    gens.push_back(Perm::from_images(img));
  }
  out.group = PermGroup(m, std::move(gens));
  out.faithful = out.group.order() == g.order();
  return out;
}

inline PermGroup coset_action(const PermGroup& g, const PermGroup& h, std::size_t max_degree = kMaxDegree,
                              std::size_t cap = kDefaultEnumerationCap) {
  return coset_action_detailed(g, h, max_degree, cap).group;
}

}  // namespace uvt

#endif  // UVT_PERM_GROUP_HPP
