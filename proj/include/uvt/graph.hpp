#ifndef UVT_GRAPH_HPP
#define UVT_GRAPH_HPP

// Finite simple graphs on at most 128 labeled vertices, stored as bitset
// adjacency rows, plus the standard constructions used by the classifier.

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uvt/perm.hpp"

namespace uvt {

inline constexpr std::size_t kMaxVertices = 128;
inline constexpr std::size_t kDefaultVertexCap = 64;

class Graph {
 public:
  using Row = std::bitset<kMaxVertices>;
  using Label = std::vector<int>;

  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : n_(n), adj_(n) {
    if (n > kMaxVertices)
      throw CapacityError("graph has " + std::to_string(n) + " vertices, limit is " +
                          std::to_string(kMaxVertices));
  }

  static Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  const Row& row(std::size_t v) const { return adj_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed in a simple graph");
    adj_[u].set(v);
    adj_[v].set(u);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : adj_) twice += r.count();
    return twice / 2;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (adj_[u][v]) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return out;
  }

  /// -1 if not regular.
  long regular_degree() const {
    if (n_ == 0) return 0;
    auto d = degree(0);
    for (std::size_t v = 1; v < n_; ++v)
      if (degree(v) != d) return -1;
    return static_cast<long>(d);
  }

  const std::vector<Label>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<Label> labels) {
    if (labels.size() != n_) throw std::invalid_argument("label count does not match vertex count");
    std::set<Label> distinct(labels.begin(), labels.end());
    if (distinct.size() != labels.size()) throw std::invalid_argument("vertex labels must be distinct");
    labels_ = std::move(labels);
  }

  /// Symmetric and loop-free at the bit level.
  bool is_valid() const {
    for (std::size_t u = 0; u < n_; ++u) {
      if (adj_[u][u]) return false;
      for (std::size_t v = n_; v < kMaxVertices; ++v)
        if (adj_[u][v]) return false;
      for (std::size_t v = 0; v < n_; ++v)
        if (adj_[u][v] != adj_[v][u]) return false;
    }
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  std::size_t n_ = 0;
  std::vector<Row> adj_;
  std::vector<Label> labels_;
};

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  if (!g.labels().empty()) h.set_labels(g.labels());
  return h;
}

/// Vertices are the edges of g in lexicographic order, labeled {u, v};
/// two are adjacent when the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
  auto es = g.edges();
  if (es.empty()) throw std::invalid_argument("line graph of an edgeless graph");
  Graph h(es.size());
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) h.add_edge(i, j);
    }
  std::vector<Graph::Label> labels;
  for (auto [u, v] : es) labels.push_back({u, v});
  h.set_labels(std::move(labels));
  return h;
}

namespace detail {

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x < n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

template <typename Adjacent>
Graph subset_graph(int n, int k, Adjacent adjacent) {
  if (k <= 0 || k >= n) throw std::invalid_argument("need 0 < k < n");
  if (binomial_capped(n, k, kMaxVertices) > kMaxVertices)
    throw CapacityError("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds vertex cap");
  auto subsets = k_subsets(n, k);
  Graph g(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      int common = 0;
      for (int x : subsets[i])
        common += static_cast<int>(std::count(subsets[j].begin(), subsets[j].end(), x));
      if (adjacent(common)) g.add_edge(i, j);
    }
  g.set_labels(std::move(subsets));
  return g;
}

}  // namespace detail

/// k-subsets of {0..n-1}, adjacent when they share k-1 elements.
inline Graph johnson(int n, int k) {
  return detail::subset_graph(n, k, [k](int common) { return common == k - 1; });
}

/// k-subsets of {0..n-1}, adjacent when disjoint.
inline Graph kneser(int n, int k) {
  return detail::subset_graph(n, k, [](int common) { return common == 0; });
}

inline Graph petersen() { return kneser(5, 2); }

/// v ~ v +- c (mod n) for every connection c.
inline Graph circulant(std::size_t n, const std::vector<int>& connections) {
  Graph g(n);
  for (int c : connections) {
    if (c <= 0 || static_cast<std::size_t>(c) > n / 2)
      throw std::invalid_argument("circulant connection must lie in 1..n/2");
    for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + c) % n);
  }
  return g;
}

/// Multiplication table of a finite group: at(a, b) = a*b.
class MulTable {
 public:
  static constexpr std::size_t kMaxOrder = 128;

  explicit MulTable(std::vector<std::vector<int>> table) : table_(std::move(table)) { validate(); }

  std::size_t order() const noexcept { return table_.size(); }
  int at(std::size_t a, std::size_t b) const { return table_[a][b]; }
  int identity() const noexcept { return identity_; }
  int inverse(int a) const {
    for (std::size_t b = 0; b < order(); ++b)
      if (table_[a][b] == identity_) return static_cast<int>(b);
    return -1;
  }
  const std::vector<std::vector<int>>& rows() const noexcept { return table_; }

 private:
  void validate() {
    const std::size_t n = table_.size();
    if (n == 0) throw std::invalid_argument("not a group: empty table");
    if (n > kMaxOrder) throw CapacityError("group order exceeds multiplication-table limit 128");
    for (const auto& r : table_) {
      if (r.size() != n) throw std::invalid_argument("not a group: table is not square");
      std::vector<bool> seen(n, false);
      for (int x : r) {
        if (x < 0 || static_cast<std::size_t>(x) >= n) throw std::invalid_argument("not a group: not closed");
        if (seen[x]) throw std::invalid_argument("not a group: row is not a permutation");
        seen[x] = true;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<bool> seen(n, false);
      for (std::size_t r = 0; r < n; ++r) {
        if (seen[table_[r][c]]) throw std::invalid_argument("not a group: column is not a permutation");
        seen[table_[r][c]] = true;
      }
    }
    identity_ = -1;
    for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        ok = table_[e][x] == static_cast<int>(x) && table_[x][e] == static_cast<int>(x);
      if (ok) identity_ = static_cast<int>(e);
    }
    if (identity_ < 0) throw std::invalid_argument("not a group: no identity");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto& ab = table_[table_[a][b]];
        for (std::size_t c = 0; c < n; ++c)
          if (ab[c] != table_[a][table_[b][c]]) throw std::invalid_argument("not a group: not associative");
      }
  }

  std::vector<std::vector<int>> table_;
  int identity_ = -1;
};

/// a ~ b iff a = s*b or b = s*a for some s in the connection set. The set is
/// symmetrized, so the result is undirected.
inline Graph cayley_graph(const MulTable& group, const std::vector<int>& connection_set) {
  if (connection_set.empty()) throw std::invalid_argument("connection set is empty");
  const auto n = group.order();
  Graph g(n);
  for (int s : connection_set) {
    if (s < 0 || static_cast<std::size_t>(s) >= n) throw std::out_of_range("connection element out of range");
    if (s == group.identity()) throw std::invalid_argument("connection set contains the identity");
    for (std::size_t b = 0; b < n; ++b) g.add_edge(static_cast<std::size_t>(group.at(s, b)), b);
  }
  return g;
}

/// Cyclic group Z_n as a multiplication table.
inline MulTable cyclic_table(std::size_t n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<int>((a + b) % n);
  return MulTable(std::move(t));
}

/// Bit-level check that sigma preserves adjacency and non-adjacency.
inline bool is_automorphism(const Graph& g, const Perm& sigma) {
  if (sigma.degree() != g.order()) throw DegreeMismatch(sigma.degree(), g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(sigma[u], sigma[v])) return false;
  return true;
}

/// Relabels vertices: vertex v of g becomes sigma(v).
inline Graph permute(const Graph& g, const Perm& sigma) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(sigma[u], sigma[v]);
  return h;
}

}  // namespace uvt

#endif  // UVT_GRAPH_HPP
