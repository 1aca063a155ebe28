#ifndef UVT_CAYLEY_HPP
#define UVT_CAYLEY_HPP

// Cayley recognition: regular subgroups of a transitive permutation group and
// the explicit Cayley data (group table + connection set) they induce.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "uvt/graph.hpp"
#include "uvt/perm_group.hpp"

namespace uvt {

inline constexpr std::uint64_t kDefaultRegularSearchBudget = 5'000'000;

enum class RegularSearchStatus { kFound, kNone, kInconclusive };

struct RegularSearchResult {
  RegularSearchStatus status = RegularSearchStatus::kNone;
  std::optional<PermGroup> subgroup;
  std::vector<Perm> elements;  // sorted elements of the subgroup when found
  std::uint64_t nodes = 0;
  std::string reason;          // set when inconclusive
};

namespace detail {

struct SortedPermsHash {
  std::size_t operator()(const std::vector<Perm>& v) const noexcept {
    std::size_t h = v.size();
    PermHash ph;
    for (const auto& p : v) h = h * 1000003u ^ ph(p);
    return h;
  }
};

class RegularSubgroupSearch {
 public:
  RegularSubgroupSearch(std::size_t n, std::vector<std::vector<Perm>> candidates, std::uint64_t budget)
      : n_(n), candidates_(std::move(candidates)), budget_(budget) {}

  std::optional<std::pair<std::vector<Perm>, std::vector<Perm>>> run() {
    std::vector<Perm> gens;
    std::vector<Perm> elems{Perm(n_)};
    return extend(gens, elems);
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  // H is semiregular; find the least point outside the H-orbit of 0 and try
  // every derangement sending 0 there.
  std::optional<std::pair<std::vector<Perm>, std::vector<Perm>>> extend(const std::vector<Perm>& gens,
                                                                        const std::vector<Perm>& elems) {
    if (elems.size() == n_) return std::make_pair(gens, elems);
    std::vector<bool> reached(n_, false);
    for (const auto& h : elems) reached[h[0]] = true;
    std::size_t v = 0;
    while (reached[v]) ++v;
    for (const auto& g : candidates_[v]) {
      if (exhausted_) return std::nullopt;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return std::nullopt;
      }
      auto next_gens = gens;
      next_gens.push_back(g);
      auto closed = closure_elements(n_, next_gens, n_);
      if (!closed) continue;
      if (n_ % closed->size() != 0) continue;
      bool semiregular = std::all_of(closed->begin() + 1, closed->end(),
                                     [](const Perm& p) { return is_derangement(p); });
      if (!semiregular) continue;
      if (!visited_.insert(*closed).second) continue;
      if (auto found = extend(next_gens, *closed)) return found;
    }
    return std::nullopt;
  }

  std::size_t n_;
  std::vector<std::vector<Perm>> candidates_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::unordered_set<std::vector<Perm>, SortedPermsHash> visited_;
};

}  // namespace detail

/// Searches G (transitive on n points) for a subgroup acting regularly.
/// Every non-identity element of such a subgroup is a derangement, so
/// subgroups are grown one derangement at a time and discarded as soon as a
/// non-identity element fixes a point or the order exceeds n.
inline RegularSearchResult find_regular_subgroup(const PermGroup& g, std::size_t n,
                                                 std::size_t cap = kDefaultEnumerationCap,
                                                 std::uint64_t budget = kDefaultRegularSearchBudget) {
  RegularSearchResult result;
  if (g.degree() != n || !g.is_transitive()) throw std::invalid_argument("find_regular_subgroup needs a transitive group");
  if (n == 1) {
    result.status = RegularSearchStatus::kFound;
    result.subgroup = PermGroup(1);
    result.elements = {Perm(1)};
    return result;
  }
  if (g.order() % n != 0) throw std::logic_error("transitive group order not divisible by degree");
  if (g.order() == n) {
    result.status = RegularSearchStatus::kFound;
    result.subgroup = g;
    result.elements = g.elements(cap);
    return result;
  }
  std::vector<Perm> elems;
  try {
    elems = g.elements(cap);
  } catch (const GroupTooLarge& e) {
    result.status = RegularSearchStatus::kInconclusive;
    result.reason = e.what();
    return result;
  }
  std::vector<std::vector<Perm>> candidates(n);
  for (auto& e : elems)
    if (is_derangement(e)) candidates[e[0]].push_back(e);

  detail::RegularSubgroupSearch search(n, std::move(candidates), budget);
  auto found = search.run();
  result.nodes = search.nodes();
  if (found) {
    result.status = RegularSearchStatus::kFound;
    result.subgroup = PermGroup(n, found->first);
    result.elements = std::move(found->second);
    if (!result.subgroup->is_regular()) throw std::logic_error("regular subgroup search produced a non-regular group");
  } else if (search.exhausted()) {
    result.status = RegularSearchStatus::kInconclusive;
    result.reason = "regular-subgroup search budget exhausted";
  } else {
    result.status = RegularSearchStatus::kNone;
  }
  return result;
}

struct CayleyRealization {
  MulTable table;
  std::vector<int> connection_set;
  std::vector<Perm> labels;  // labels[v] = the element of R sending vertex 0 to v
};

/// Explicit Cayley data for a graph with a regular group of automorphisms R.
/// Vertex v is identified with the unique r_v in R with r_v(0) = v, and the
/// table multiplies as r_a * r_b := r_b o r_a (the opposite of composition),
/// which is what makes "a = s*b" adjacency agree with g under the identity
/// vertex labeling. The connection set is {v : v ~ 0}.
inline CayleyRealization cayley_realization(const Graph& g, const PermGroup& r, std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t n = g.order();
  if (r.degree() != n || !r.is_regular()) throw std::invalid_argument("cayley_realization needs a regular group");
  std::vector<Perm> labels(n);
  for (auto& e : r.elements(cap)) labels[e[0]] = e;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<int>(labels[b][a]);
  std::vector<int> connection;
  for (std::size_t v = 1; v < n; ++v)
    if (g.adjacent(0, v)) connection.push_back(static_cast<int>(v));
  CayleyRealization out{MulTable(std::move(table)), std::move(connection), std::move(labels)};
  if (!out.connection_set.empty()) {
    if (!(cayley_graph(out.table, out.connection_set) == g))
      throw std::logic_error("Cayley realization does not reproduce the graph");
  } else if (g.edge_count() != 0) {
    throw std::logic_error("Cayley realization lost edges");
  }
  return out;
}

}  // namespace uvt

#endif  // UVT_CAYLEY_HPP
