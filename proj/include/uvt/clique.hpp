#ifndef UVT_CLIQUE_HPP
#define UVT_CLIQUE_HPP

// Exact maximum-clique and fixed-size clique search over a graph given by an
// adjacency oracle. Bitset branch and bound with a greedy coloring bound,
// vertices renumbered by degeneracy order so that coloring runs in bit order.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace uvt {

inline constexpr std::size_t kDenseCliqueCap = 4096;
inline constexpr std::uint64_t kDefaultCliqueBudget = 1'000'000'000;

/// Undirected graph on N vertices defined by a symmetric, irreflexive predicate.
/// Rows are materialized as bitsets: all at once when N <= dense cap,
/// otherwise on first use.
class OracleGraph {
 public:
  using Words = std::vector<std::uint64_t>;
  using Predicate = std::function<bool(std::size_t, std::size_t)>;

  OracleGraph(std::size_t n, Predicate adjacent, std::size_t dense_cap = kDenseCliqueCap)
      : n_(n), words_((n + 63) / 64), adjacent_(std::move(adjacent)), rows_(n), ready_(n, 0) {
    if (n <= dense_cap) {
      for (std::size_t u = 0; u < n; ++u) rows_[u].assign(words_, 0);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (adjacent_(u, v)) {
            if (!adjacent_(v, u)) throw std::invalid_argument("adjacency oracle is not symmetric");
            rows_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
            rows_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
          }
      for (std::size_t u = 0; u < n; ++u)
        if (adjacent_(u, u)) throw std::invalid_argument("adjacency oracle has a loop");
      std::fill(ready_.begin(), ready_.end(), 1);
      dense_ = true;
    }
  }

  /// Builds from explicit adjacency lists (for tests and small fixtures).
  static OracleGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    auto matrix = std::make_shared<std::vector<char>>(n * n, 0);
    for (auto [u, v] : edges) {
      if (u == v) throw std::invalid_argument("loop edge");
      (*matrix)[u * n + v] = (*matrix)[v * n + u] = 1;
    }
    return OracleGraph(n, [matrix, n](std::size_t u, std::size_t v) { return (*matrix)[u * n + v] != 0; });
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  bool dense() const noexcept { return dense_; }
  bool adjacent(std::size_t u, std::size_t v) const { return u != v && adjacent_(u, v); }

  const Words& row(std::size_t u) const {
    if (!ready_[u]) {
      rows_[u].assign(words_, 0);
      for (std::size_t v = 0; v < n_; ++v)
        if (v != u && adjacent_(u, v)) rows_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
      ready_[u] = 1;
    }
    return rows_[u];
  }

  std::size_t degree(std::size_t u) const {
    std::size_t d = 0;
    for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  Predicate adjacent_;
  mutable std::vector<Words> rows_;
  mutable std::vector<char> ready_;
  bool dense_ = false;
};

enum class SearchStatus { kComplete, kBudgetExhausted };

struct CliqueResult {
  std::vector<std::size_t> clique;  // sorted vertex ids
  SearchStatus status = SearchStatus::kComplete;
  std::size_t lower_bound = 0;      // clique.size()
  std::size_t upper_bound = 0;      // equals lower_bound when complete
  std::uint64_t nodes = 0;

  bool complete() const noexcept { return status == SearchStatus::kComplete; }
};

struct CliqueOptions {
  std::uint64_t node_budget = kDefaultCliqueBudget;
  /// Stop as soon as a clique of this size is found (0 = search for the maximum).
  std::size_t stop_at = 0;
};

/// Number of color classes used by first-fit coloring of the candidates in
/// index order; an upper bound on the clique number of the induced subgraph.
inline std::size_t greedy_color_bound(const OracleGraph& g, const std::vector<std::size_t>& candidates) {
  std::vector<std::size_t> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<std::size_t>> classes;
  for (auto v : sorted) {
    bool placed = false;
    for (auto& cls : classes) {
      bool ok = std::none_of(cls.begin(), cls.end(), [&](std::size_t u) { return g.adjacent(u, v); });
      if (ok) {
        cls.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({v});
  }
  return classes.size();
}

namespace detail {

class CliqueSearch {
 public:
  using Words = OracleGraph::Words;

  CliqueSearch(const OracleGraph& g, CliqueOptions options) : g_(g), options_(options) {
    const std::size_t n = g.size();
    words_ = (n + 63) / 64;
    order_ = initial_order();
    position_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) position_[order_[i]] = i;
  }

  /// best_so_far: search only for cliques strictly larger than this.
  CliqueResult run(std::size_t best_so_far) {
    const std::size_t n = g_.size();
    best_size_ = best_so_far;
    Words all(words_, 0);
    for (std::size_t i = 0; i < n; ++i) all[i >> 6] |= std::uint64_t{1} << (i & 63);
    root_bound_ = n;
    current_.clear();
    aborted_ = false;
    done_ = false;
    if (options_.stop_at > 0 && best_size_ >= options_.stop_at) done_ = true;
    if (n > 0 && !done_) expand(all);

    CliqueResult r;
    for (auto i : best_) r.clique.push_back(order_[i]);
    std::sort(r.clique.begin(), r.clique.end());
    for (std::size_t i = 0; i < r.clique.size(); ++i)
      for (std::size_t j = i + 1; j < r.clique.size(); ++j)
        if (!g_.adjacent(r.clique[i], r.clique[j])) throw std::logic_error("clique search returned a non-clique");
    r.nodes = nodes_;
    r.lower_bound = r.clique.size();
    r.status = aborted_ ? SearchStatus::kBudgetExhausted : SearchStatus::kComplete;
    r.upper_bound = aborted_ ? std::max(root_bound_, r.lower_bound) : r.lower_bound;
    return r;
  }

  std::size_t best_size() const noexcept { return best_size_; }

 private:
  // Degeneracy order: repeatedly remove a vertex of minimum remaining degree
  // (ties to the smaller index); the last removed vertex gets position 0.
  std::vector<std::size_t> initial_order() const {
    const std::size_t n = g_.size();
    std::vector<std::size_t> order(n);
    if (!g_.dense()) {
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      return order;
    }
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g_.degree(v);
    std::vector<char> removed(n, 0);
    std::vector<std::size_t> removal;
    removal.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t pick = n;
      for (std::size_t v = 0; v < n; ++v)
        if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
      removed[pick] = 1;
      removal.push_back(pick);
      const auto& row = g_.row(pick);
      for (std::size_t w = 0; w < words_; ++w) {
        auto bits = row[w];
        while (bits) {
          std::size_t u = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          if (!removed[u]) --deg[u];
        }
      }
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
  }

  // Row of renumbered vertex i, in renumbered coordinates.
  const Words& row(std::size_t i) {
    if (renumbered_.empty()) renumbered_.resize(g_.size());
    auto& r = renumbered_[i];
    if (r.empty()) {
      r.assign(words_, 0);
      const auto& src = g_.row(order_[i]);
      for (std::size_t w = 0; w < words_; ++w) {
        auto bits = src[w];
        while (bits) {
          std::size_t v = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          std::size_t j = position_[v];
          r[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
      }
    }
    return r;
  }

  static bool empty(const Words& s) {
    return std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
  }

  void record() {
    best_ = current_;
    best_size_ = current_.size();
    if (options_.stop_at > 0 && best_size_ >= options_.stop_at) done_ = true;
  }

  void expand(Words p) {
    if (done_ || aborted_) return;
    if (++nodes_ > options_.node_budget) {
      aborted_ = true;
      return;
    }
    // Greedy sequential coloring; only vertices whose color can still beat
    // the incumbent are branching candidates.
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    {
      Words uncolored = p;
      Words q(words_);
      std::size_t k = 0;
      const std::size_t kmin = best_size_ + 1 > current_.size() ? best_size_ + 1 - current_.size() : 1;
      while (!empty(uncolored)) {
        ++k;
        q = uncolored;
        for (std::size_t w = 0; w < words_; ++w) {
          while (q[w]) {
            std::size_t v = (w << 6) + static_cast<std::size_t>(std::countr_zero(q[w]));
            q[w] &= q[w] - 1;
            uncolored[w] &= ~(std::uint64_t{1} << (v & 63));
            const auto& r = row(v);
            for (std::size_t x = w; x < words_; ++x) q[x] &= ~r[x];
            if (k >= kmin) {
              verts.push_back(v);
              colors.push_back(k);
            }
          }
        }
      }
      if (current_.empty()) root_bound_ = k;
    }
    Words next(words_);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= best_size_) return;
      const std::size_t v = verts[i];
      current_.push_back(v);
      if (current_.size() > best_size_) record();
      if (done_) return;
      const auto& r = row(v);
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = p[w] & r[w];
        any = any || next[w] != 0;
      }
      if (any) expand(next);
      if (done_ || aborted_) return;
      current_.pop_back();
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  const OracleGraph& g_;
  CliqueOptions options_;
  std::size_t words_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<Words> renumbered_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;
  std::size_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
};

}  // namespace detail

/// A maximum clique (or, with stop_at, the first clique reaching that size).
inline CliqueResult max_clique(const OracleGraph& g, CliqueOptions options = {}) {
  return detail::CliqueSearch(g, options).run(0);
}

struct CliqueDecision {
  std::optional<std::vector<std::size_t>> clique;  // set when found
  SearchStatus status = SearchStatus::kComplete;   // budget exhaustion => inconclusive
  std::uint64_t nodes = 0;

  bool found() const noexcept { return clique.has_value(); }
  bool inconclusive() const noexcept { return !found() && status == SearchStatus::kBudgetExhausted; }
};

/// A clique of exactly t vertices, if one exists. Branches whose coloring
/// bound cannot reach t are pruned from the start.
inline CliqueDecision has_clique_of_size(const OracleGraph& g, std::size_t t,
                                         std::uint64_t node_budget = kDefaultCliqueBudget) {
  CliqueDecision d;
  if (t == 0) {
    d.clique = std::vector<std::size_t>{};
    return d;
  }
  if (t > g.size()) return d;
  CliqueOptions opts;
  opts.node_budget = node_budget;
  opts.stop_at = t;
  auto r = detail::CliqueSearch(g, opts).run(t - 1);
  d.nodes = r.nodes;
  d.status = r.status;
  if (r.clique.size() >= t) {
    r.clique.resize(t);
    d.clique = std::move(r.clique);
    d.status = SearchStatus::kComplete;
  }
  return d;
}

}  // namespace uvt

#endif  // UVT_CLIQUE_HPP
