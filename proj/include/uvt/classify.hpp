#ifndef UVT_CLASSIFY_HPP
#define UVT_CLASSIFY_HPP

// Decision procedures on the chain Cayley => uniformly vertex-transitive =>
// vertex-transitive.
//
// A maximal Schur set of a transitive group G on n points is a set of n
// elements whose permutation matrices sum to J_n. Two elements can sit in
// the same set iff they disagree on every point, i.e. they are adjacent in
// the derangement graph D(G); left translation preserves this, so one may
// assume the identity is in the set and look for an (n-1)-clique among the
// derangements of G.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uvt/automorphism.hpp"
#include "uvt/blocks.hpp"
#include "uvt/cayley.hpp"
#include "uvt/clique.hpp"
#include "uvt/graph.hpp"
#include "uvt/orbital.hpp"
#include "uvt/perm.hpp"
#include "uvt/perm_group.hpp"

namespace uvt {

inline constexpr std::uint64_t kDefaultCoverBudget = 50'000'000;

struct Budgets {
  std::uint64_t clique_nodes = kDefaultCliqueBudget;
  std::uint64_t cover_nodes = kDefaultCoverBudget;
  std::uint64_t regular_nodes = kDefaultRegularSearchBudget;
  std::size_t max_group = kDefaultEnumerationCap;
  std::size_t block_degree_cap = kBlockDegreeCap;
};

enum class Verdict { kYes, kNo, kInconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

/// k-maximal Schur set: k*n elements whose matrices sum to k*J_n.
struct SchurSet {
  std::vector<Perm> perms;
  std::size_t k = 1;
  std::size_t degree = 0;

  bool verify() const {
    return degree > 0 && check_k_uniform_sum(perms, degree, k) == UniformSumResult::kOk;
  }
};

/// Derangements among `elements`, as indices.
inline std::vector<std::size_t> derangement_indices(const std::vector<Perm>& elements) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (is_derangement(elements[i])) out.push_back(i);
  return out;
}

/// Neighbourhood of the identity in D(G): vertices are the given derangements,
/// adjacent when Schur-orthogonal.
inline OracleGraph derangement_neighbourhood(const std::vector<Perm>& derangements) {
  const auto* d = &derangements;
  return OracleGraph(derangements.size(),
                     [d](std::size_t a, std::size_t b) { return a != b && schur_orthogonal((*d)[a], (*d)[b]); });
}

/// The whole derangement graph D(G) on the listed elements.
inline OracleGraph derangement_graph(const std::vector<Perm>& elements) {
  const auto* e = &elements;
  return OracleGraph(elements.size(),
                     [e](std::size_t a, std::size_t b) { return a != b && schur_orthogonal((*e)[a], (*e)[b]); });
}

struct UniformResult {
  Verdict verdict = Verdict::kInconclusive;
  std::optional<SchurSet> witness;
  /// Clique number of D(G)_id when known exactly (n - 1 on yes).
  std::optional<std::size_t> omega_id;
  std::size_t omega_lower = 0;
  std::size_t omega_upper = 0;
  std::size_t derangements = 0;
  std::uint64_t nodes = 0;
  std::string method;  // "regular", "clique", "factorizing"
  std::string reason;  // why inconclusive

  /// omega(D(G)) - degree, the quantity tabulated per group.
  std::optional<long> omega_deficit(std::size_t degree) const {
    if (!omega_id) return std::nullopt;
    return static_cast<long>(*omega_id) + 1 - static_cast<long>(degree);
  }
};

/// Clique test on D(G)_id. With exact_omega the search continues to the true
/// clique number when no (n-1)-clique exists.
inline UniformResult is_uniformly_transitive(const PermGroup& g, const Budgets& budgets = {}) {
  const std::size_t n = g.degree();
  if (!g.is_transitive()) throw std::invalid_argument("is_uniformly_transitive needs a transitive group");
  UniformResult r;
  if (n <= 1 || g.is_regular()) {
    r.verdict = Verdict::kYes;
    r.method = "regular";
    r.witness = SchurSet{n <= 1 ? std::vector<Perm>{Perm(n)} : g.elements(budgets.max_group), 1, n};
    r.omega_id = n - 1;
    r.omega_lower = r.omega_upper = n - 1;
    if (!r.witness->verify()) throw std::logic_error("regular group is not a maximal Schur set");
    return r;
  }
  std::vector<Perm> elements;
  try {
    elements = g.elements(budgets.max_group);
  } catch (const GroupTooLarge& e) {
    r.reason = e.what();
    r.omega_upper = n - 1;
    return r;
  }
  std::vector<Perm> der;
  for (auto i : derangement_indices(elements)) der.push_back(elements[i]);
  r.derangements = der.size();
  auto graph = derangement_neighbourhood(der);
  CliqueOptions opts;
  opts.node_budget = budgets.clique_nodes;
  opts.stop_at = n - 1;
  auto c = max_clique(graph, opts);
  r.nodes = c.nodes;
  r.method = "clique";
  r.omega_lower = c.lower_bound;
  r.omega_upper = std::min(c.upper_bound, n - 1);
  if (c.lower_bound >= n - 1) {
    SchurSet s{{Perm(n)}, 1, n};
    for (auto i : c.clique) s.perms.push_back(der[i]);
    if (!s.verify()) throw std::logic_error("clique witness does not sum to J_n");
    r.verdict = Verdict::kYes;
    r.witness = std::move(s);
    r.omega_id = n - 1;
  } else if (c.complete()) {
    r.verdict = Verdict::kNo;
    r.omega_id = c.lower_bound;
  } else {
    r.reason = "clique budget exhausted";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Factorizing block systems.

/// Block system B (m blocks of size k) with k mutually orthogonal fixer
/// elements and a maximal Schur set of the quotient on the blocks; the
/// products inner[i] o outer[j] form a maximal Schur set of G.
struct FactorizingWitness {
  BlockSystem system;
  std::vector<Perm> inner;
  std::vector<Perm> outer;        // lifts to G
  std::vector<Perm> outer_blocks; // the quotient's maximal Schur set
  SchurSet product;
};

enum class SystemOutcome { kFactorizing, kFixerFails, kQuotientFails, kInconclusive };

inline const char* to_string(SystemOutcome o) {
  switch (o) {
    case SystemOutcome::kFactorizing: return "factorizing";
    case SystemOutcome::kFixerFails: return "fixer_fails";
    case SystemOutcome::kQuotientFails: return "quotient_fails";
    case SystemOutcome::kInconclusive: return "inconclusive";
  }
  return "?";
}

struct SystemReport {
  std::size_t block_count = 0;
  std::size_t block_size = 0;
  std::string fixer_order;
  std::string quotient_order;
  SystemOutcome outcome = SystemOutcome::kInconclusive;
  std::string note;
};

struct FactorizingResult {
  std::optional<FactorizingWitness> witness;
  std::vector<SystemReport> systems;
  bool primitive = false;   // no nontrivial systems
  bool exhaustive = true;   // every system decided (no inconclusive outcome)
  std::string reason;       // set if the systems could not be listed
};

inline UniformResult uniformly_transitive_with_fallback(const PermGroup& g, const Budgets& budgets);

/// k mutually Schur-orthogonal elements of `group`, identity first. By left
/// translation within the group any such set can be moved to contain the identity.
inline std::optional<std::vector<Perm>> orthogonal_subset(const PermGroup& group, std::size_t k, const Budgets& budgets,
                                                          bool& inconclusive) {
  inconclusive = false;
  const std::size_t n = group.degree();
  if (k == 0) return std::vector<Perm>{};
  if (group.order() < k) return std::nullopt;
  std::vector<Perm> elements;
  try {
    elements = group.elements(budgets.max_group);
  } catch (const GroupTooLarge&) {
    inconclusive = true;
    return std::nullopt;
  }
  std::vector<Perm> der;
  for (auto i : derangement_indices(elements)) der.push_back(elements[i]);
  auto graph = derangement_neighbourhood(der);
  auto d = has_clique_of_size(graph, k - 1, budgets.clique_nodes);
  if (d.inconclusive()) {
    inconclusive = true;
    return std::nullopt;
  }
  if (!d.found()) return std::nullopt;
  std::vector<Perm> out{Perm(n)};
  for (auto i : *d.clique) out.push_back(der[i]);
  return out;
}

inline FactorizingResult find_factorizing_block_system(const PermGroup& g, const Budgets& budgets = {}) {
  FactorizingResult result;
  if (!g.is_transitive()) throw std::invalid_argument("find_factorizing_block_system needs a transitive group");
  std::vector<BlockSystem> systems;
  try {
    systems = all_block_systems(g, budgets.block_degree_cap);
  } catch (const CapacityError& e) {
    result.exhaustive = false;
    result.reason = e.what();
    return result;
  }
  result.primitive = systems.empty();
  const std::size_t n = g.degree();
  for (const auto& system : systems) {
    SystemReport rep;
    rep.block_count = system.block_count();
    rep.block_size = system.block_size();
    QuotientAction action(g, system);
    rep.fixer_order = action.fixer().order_string();
    rep.quotient_order = action.quotient().order_string();
    bool inconclusive = false;
    auto inner = orthogonal_subset(action.fixer(), system.block_size(), budgets, inconclusive);
    if (!inner) {
      rep.outcome = inconclusive ? SystemOutcome::kInconclusive : SystemOutcome::kFixerFails;
      if (inconclusive) rep.note = "fixer search exceeded caps";
      if (inconclusive) result.exhaustive = false;
      result.systems.push_back(std::move(rep));
      continue;
    }
    auto quotient = uniformly_transitive_with_fallback(action.quotient(), budgets);
    if (quotient.verdict != Verdict::kYes) {
      rep.outcome = quotient.verdict == Verdict::kNo ? SystemOutcome::kQuotientFails : SystemOutcome::kInconclusive;
      if (quotient.verdict == Verdict::kInconclusive) {
        rep.note = "quotient: " + quotient.reason;
        result.exhaustive = false;
      }
      result.systems.push_back(std::move(rep));
      continue;
    }
    FactorizingWitness w{system, *inner, {}, quotient.witness->perms, SchurSet{{}, 1, n}};
    for (const auto& q : w.outer_blocks) w.outer.push_back(action.lift(q));
    for (const auto& a : w.inner)
      for (const auto& b : w.outer) w.product.perms.push_back(compose(a, b));
    if (!w.product.verify()) throw std::logic_error("factorizing product does not sum to J_n");
    rep.outcome = SystemOutcome::kFactorizing;
    result.systems.push_back(std::move(rep));
    if (!result.witness) result.witness = std::move(w);
    // The first witness in system order is reported; remaining systems are not examined.
    break;
  }
  return result;
}

/// Clique test first; if that is inconclusive, a factorizing block system
/// still proves uniform transitivity. Its absence proves nothing.
inline UniformResult uniformly_transitive_with_fallback(const PermGroup& g, const Budgets& budgets) {
  auto r = is_uniformly_transitive(g, budgets);
  if (r.verdict != Verdict::kInconclusive) return r;
  auto f = find_factorizing_block_system(g, budgets);
  if (f.witness) {
    r.verdict = Verdict::kYes;
    r.method = "factorizing";
    r.witness = f.witness->product;
    r.omega_id = g.degree() - 1;
    r.reason.clear();
  }
  return r;
}

/// For a group known to be simple: every block system's fixer is trivial or
/// everything, and no system is factorizing. Returns false for non-simple input.
inline bool check_simple_group_obstruction(const PermGroup& g, bool is_simple, const Budgets& budgets = {}) {
  if (!is_simple) return false;
  auto systems = all_block_systems(g, budgets.block_degree_cap);
  for (const auto& s : systems) {
    QuotientAction action(g, s);
    auto f = action.fixer().order();
    if (f != 1 && f != g.order()) return false;
  }
  auto result = find_factorizing_block_system(g, budgets);
  return !result.witness && result.exhaustive;
}

// ---------------------------------------------------------------------------
// A5 acting primitively.

struct A5Action {
  std::string name;
  PermGroup group;
  std::size_t invariant_graphs = 0;
  std::vector<std::string> aut_orders;  // one per invariant graph
  bool ok = false;                      // no invariant graph has Aut equal to this A5
};

inline PermGroup alternating_group_a5() {
  return PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1, 2}})});
}

/// The primitive actions of A5 (on cosets of A4, D10, S3) and, for each, the
/// automorphism-group orders of all A5-invariant graphs.
inline std::vector<A5Action> a5_primitive_actions(std::size_t cap = kDefaultEnumerationCap) {
  auto a5 = alternating_group_a5();
  struct Sub {
    const char* name;
    PermGroup h;
    std::size_t order;
  };
  std::vector<Sub> subs = {
      {"A5 on cosets of A4 (degree 5)",
       PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{1, 2, 3}})}), 12},
      {"A5 on cosets of D10 (degree 6)",
       PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{1, 4}, {2, 3}})}), 10},
      {"A5 on cosets of S3 (degree 10)",
       PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{0, 1}, {3, 4}})}), 6},
  };
  std::vector<A5Action> out;
  for (auto& s : subs) {
    if (s.h.order() != s.order || !a5.contains_group(s.h)) throw std::logic_error("bad A5 subgroup fixture");
    A5Action act{s.name, coset_action(a5, s.h, kMaxDegree, cap), 0, {}, true};
    if (act.group.order() != 60) throw std::logic_error("A5 coset action is not faithful");
    auto graphs = orbital_union_graphs(act.group);
    act.invariant_graphs = graphs.size();
    for (const auto& gr : graphs) {
      auto aut = automorphism_group(gr);
      act.aut_orders.push_back(aut.order_string());
      if (!aut.contains_group(act.group)) throw std::logic_error("invariant graph does not admit the acting group");
      if (aut.order() == 60) act.ok = false;
    }
    out.push_back(std::move(act));
  }
  return out;
}

/// True when no graph invariant under a primitive A5 action has exactly that
/// A5 as its automorphism group.
inline bool verify_a5_imprimitivity() {
  auto actions = a5_primitive_actions();
  return std::all_of(actions.begin(), actions.end(), [](const A5Action& a) { return a.ok; });
}

// ---------------------------------------------------------------------------
// k-uniform transitivity.

struct KUniformResult {
  Verdict verdict = Verdict::kInconclusive;
  std::optional<SchurSet> witness;
  std::string method;  // whole-group, complement, cayley-cosets, clique, exact-cover, bound
  std::uint64_t nodes = 0;
  std::string reason;
};

/// G minus a k-maximal Schur set is an (s-k)-maximal Schur set, s = |G|/n.
inline SchurSet complement_schur_set(const PermGroup& g, const SchurSet& s, std::size_t cap = kDefaultEnumerationCap) {
  if (!s.verify()) throw std::invalid_argument("input is not a verified k-maximal Schur set");
  const std::size_t n = g.degree();
  auto elements = g.elements(cap);
  const std::size_t stab = elements.size() / n;
  if (s.k >= stab) throw std::invalid_argument("complement would be empty (k must be below the stabilizer order)");
  PermSet members(s.perms.begin(), s.perms.end());
  for (const auto& p : s.perms)
    if (!g.contains(p)) throw std::invalid_argument("Schur set is not contained in the group");
  SchurSet out{{}, stab - s.k, n};
  for (const auto& e : elements)
    if (!members.count(e)) out.perms.push_back(e);
  if (!out.verify()) throw std::logic_error("complement of a Schur set failed verification");
  return out;
}

/// Union of the first k left cosets aR (in element order) of a regular subgroup R.
inline SchurSet cayley_k_schur(const PermGroup& g, const PermGroup& r, std::size_t k,
                               std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t n = g.degree();
  if (!r.is_regular() || r.degree() != n || !g.contains_group(r)) throw std::invalid_argument("R must be a regular subgroup of G");
  auto elements = g.elements(cap);
  const std::size_t stab = elements.size() / n;
  if (k < 1 || k > stab) throw std::invalid_argument("k must lie in 1..s");
  auto sub = r.elements(cap);
  PermSet used;
  SchurSet out{{}, k, n};
  std::size_t cosets = 0;
  for (const auto& a : elements) {
    if (cosets == k) break;
    if (used.count(a)) continue;
    for (const auto& x : sub) {
      auto ax = compose(a, x);
      used.insert(ax);
      out.perms.push_back(std::move(ax));
    }
    ++cosets;
  }
  if (!out.verify()) throw std::logic_error("coset union failed verification");
  return out;
}

namespace detail {

/// Exact cover of the n*n cells, each exactly k times, by kn group elements.
/// Branches include/exclude on the first candidate of the cell with least
/// slack (available candidates minus remaining need).
class MultiCover {
 public:
  MultiCover(const std::vector<Perm>& elements, std::size_t n, std::size_t k, std::uint64_t budget)
      : elements_(elements), n_(n), k_(k), budget_(budget), count_(n * n, 0), state_(elements.size(), kFree) {
    covers_.resize(n * n);
    for (std::size_t e = 0; e < elements.size(); ++e)
      for (std::size_t u = 0; u < n; ++u) covers_[u * n + elements[e][u]].push_back(e);
  }

  std::optional<std::vector<Perm>> run() {
    // The identity (element 0) can always be assumed present.
    if (!elements_.front().is_identity()) throw std::logic_error("element list must start with the identity");
    take(0);
    if (search()) {
      std::vector<Perm> out;
      for (std::size_t e = 0; e < elements_.size(); ++e)
        if (state_[e] == kTaken) out.push_back(elements_[e]);
      return out;
    }
    return std::nullopt;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  enum : char { kFree, kTaken, kExcluded };

  bool available(std::size_t e) const {
    if (state_[e] != kFree) return false;
    for (std::size_t u = 0; u < n_; ++u)
      if (count_[u * n_ + elements_[e][u]] >= k_) return false;
    return true;
  }

  void take(std::size_t e) {
    state_[e] = kTaken;
    for (std::size_t u = 0; u < n_; ++u) ++count_[u * n_ + elements_[e][u]];
  }
  void untake(std::size_t e) {
    state_[e] = kFree;
    for (std::size_t u = 0; u < n_; ++u) --count_[u * n_ + elements_[e][u]];
  }

  bool search() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    std::size_t best_cell = n_ * n_;
    long best_slack = 0;
    std::size_t best_first = 0;
    for (std::size_t c = 0; c < n_ * n_; ++c) {
      if (count_[c] >= k_) continue;
      long need = static_cast<long>(k_ - count_[c]);
      long avail = 0;
      std::size_t first = elements_.size();
      for (auto e : covers_[c])
        if (available(e)) {
          if (first == elements_.size()) first = e;
          ++avail;
        }
      long slack = avail - need;
      if (slack < 0) return false;
      if (best_cell == n_ * n_ || slack < best_slack) {
        best_cell = c;
        best_slack = slack;
        best_first = first;
        if (slack == 0 && need == avail) {
          // forced: fall through with this cell
        }
      }
    }
    if (best_cell == n_ * n_) return true;  // every cell reached k
    const std::size_t e = best_first;
    take(e);
    if (search()) return true;
    untake(e);
    if (exhausted_) return false;
    state_[e] = kExcluded;
    bool ok = search();
    if (!ok) state_[e] = kFree;
    return ok;
  }

  const std::vector<Perm>& elements_;
  std::size_t n_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> count_;
  std::vector<char> state_;
  std::vector<std::vector<std::size_t>> covers_;
};

}  // namespace detail

/// Generalized exact cover search for a k-maximal Schur set (no shortcuts).
inline KUniformResult k_cover_search(const PermGroup& g, std::size_t k, const Budgets& budgets = {}) {
  KUniformResult r;
  r.method = "exact-cover";
  const std::size_t n = g.degree();
  std::vector<Perm> elements;
  try {
    elements = g.elements(budgets.max_group);
  } catch (const GroupTooLarge& e) {
    r.reason = e.what();
    return r;
  }
  detail::MultiCover cover(elements, n, k, budgets.cover_nodes);
  auto found = cover.run();
  r.nodes = cover.nodes();
  if (found) {
    r.verdict = Verdict::kYes;
    r.witness = SchurSet{std::move(*found), k, n};
    if (!r.witness->verify()) throw std::logic_error("exact cover witness failed verification");
  } else if (cover.exhausted()) {
    r.reason = "cover budget exhausted";
  } else {
    r.verdict = Verdict::kNo;
  }
  return r;
}

/// Decides whether G has a k-maximal Schur set. Shortcuts: k = s (whole
/// group), k > s (impossible: only s elements fix a given point), a regular
/// subgroup (unions of its cosets), k = 1 or s - k = 1 (clique test, possibly
/// complemented); otherwise exact cover on min(k, s - k) and complement.
inline KUniformResult k_uvt(const PermGroup& g, std::size_t k, const Budgets& budgets = {}) {
  if (!g.is_transitive()) throw std::invalid_argument("k_uvt needs a transitive group");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const std::size_t n = g.degree();
  KUniformResult r;
  const BigInt stab_big = g.order() / n;
  if (BigInt(k) > stab_big) {
    r.verdict = Verdict::kNo;
    r.method = "bound";
    return r;
  }
  const auto stab = static_cast<std::size_t>(stab_big);
  if (g.order() > budgets.max_group) {
    r.reason = "group of order " + g.order_string() + " exceeds enumeration cap";
    return r;
  }
  if (k == stab) {
    r.verdict = Verdict::kYes;
    r.method = "whole-group";
    r.witness = SchurSet{g.elements(budgets.max_group), k, n};
    if (!r.witness->verify()) throw std::logic_error("whole group failed verification");
    return r;
  }
  auto regular = find_regular_subgroup(g, n, budgets.max_group, budgets.regular_nodes);
  if (regular.status == RegularSearchStatus::kFound) {
    r.verdict = Verdict::kYes;
    r.method = "cayley-cosets";
    r.witness = cayley_k_schur(g, *regular.subgroup, k, budgets.max_group);
    return r;
  }
  const std::size_t dual = stab - k;
  const std::size_t small = std::min(k, dual);
  KUniformResult inner;
  if (small == 1) {
    auto u = is_uniformly_transitive(g, budgets);
    inner.verdict = u.verdict;
    inner.witness = u.witness;
    inner.method = "clique";
    inner.nodes = u.nodes;
    inner.reason = u.reason;
  } else {
    inner = k_cover_search(g, small, budgets);
  }
  if (small == k || inner.verdict != Verdict::kYes) {
    inner.witness = small == k ? inner.witness : std::nullopt;
    if (small != k) inner.method = "complement+" + inner.method;
    return inner;
  }
  inner.witness = complement_schur_set(g, *inner.witness, budgets.max_group);
  inner.method = "complement+" + inner.method;
  return inner;
}

// ---------------------------------------------------------------------------
// Whole-graph classification.

struct ClassificationReport {
  std::string id;  // graph6 line or construction name
  std::size_t n = 0;
  std::string aut_order;
  std::vector<Perm> aut_generators;
  bool vertex_transitive = false;

  Verdict cayley = Verdict::kNo;
  std::vector<Perm> regular_subgroup_generators;
  std::vector<int> connection_set;

  Verdict uvt = Verdict::kNo;
  std::string uvt_method;
  std::optional<SchurSet> witness;
  std::optional<std::size_t> omega_id;
  std::size_t omega_lower = 0;
  std::size_t omega_upper = 0;
  std::optional<long> omega_deficit;

  std::string factorizing = "not_checked";  // found | none | inconclusive | primitive | not_checked
  std::optional<FactorizingWitness> factorizing_witness;
  std::vector<SystemReport> block_systems;

  double ms_automorphisms = 0;
  double ms_cayley = 0;
  double ms_uvt = 0;
  double ms_factorizing = 0;
  bool group_too_large = false;
  bool clique_budget_exhausted = false;
  bool regular_budget_exhausted = false;
  std::vector<std::string> notes;

  /// Implication chain checks; throws on violation.
  void check_invariants() const {
    if (cayley == Verdict::kYes && uvt != Verdict::kYes) throw std::logic_error("Cayley graph not reported UVT");
    if (uvt == Verdict::kYes && !vertex_transitive) throw std::logic_error("UVT graph not reported vertex-transitive");
    if (uvt == Verdict::kNo && cayley == Verdict::kYes) throw std::logic_error("non-UVT graph reported Cayley");
    if (uvt == Verdict::kYes && (!witness || !witness->verify())) throw std::logic_error("UVT verdict without verified witness");
  }
};

struct ClassifyOptions {
  Budgets budgets;
  /// Also search for a factorizing block system when the verdict is already known.
  bool factorizing_evidence = true;
};

namespace detail {
inline double ms_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}
}  // namespace detail

/// Full pipeline: Aut -> transitivity -> regular subgroup -> clique test ->
/// factorizing systems.
inline ClassificationReport is_uvt(const Graph& g, const ClassifyOptions& options = {}, std::string id = {}) {
  using Clock = std::chrono::steady_clock;
  const auto& budgets = options.budgets;
  ClassificationReport rep;
  rep.id = std::move(id);
  rep.n = g.order();

  auto t0 = Clock::now();
  auto aut = automorphism_group(g);
  rep.ms_automorphisms = detail::ms_since(t0);
  rep.aut_order = aut.order_string();
  rep.aut_generators = aut.generators();
  rep.vertex_transitive = aut.is_transitive();
  if (!rep.vertex_transitive) {
    rep.cayley = Verdict::kNo;
    rep.uvt = Verdict::kNo;
    rep.factorizing = "not_applicable";
    rep.check_invariants();
    return rep;
  }
  const std::size_t n = g.order();

  auto t1 = Clock::now();
  auto regular = find_regular_subgroup(aut, n, budgets.max_group, budgets.regular_nodes);
  rep.ms_cayley = detail::ms_since(t1);
  if (regular.status == RegularSearchStatus::kFound) {
    rep.cayley = Verdict::kYes;
    rep.regular_subgroup_generators = regular.subgroup->generators();
    rep.connection_set = cayley_realization(g, *regular.subgroup, budgets.max_group).connection_set;
    rep.uvt = Verdict::kYes;
    rep.uvt_method = "regular-subgroup";
    rep.witness = SchurSet{regular.elements, 1, n};
    rep.omega_id = n - 1;
    rep.omega_lower = rep.omega_upper = n - 1;
    rep.omega_deficit = 0;
    rep.factorizing = "not_checked";
    rep.check_invariants();
    return rep;
  }
  rep.cayley = regular.status == RegularSearchStatus::kNone ? Verdict::kNo : Verdict::kInconclusive;
  if (regular.status == RegularSearchStatus::kInconclusive) {
    rep.notes.push_back("cayley: " + regular.reason);
    if (regular.reason.find("budget") != std::string::npos)
      rep.regular_budget_exhausted = true;
    else
      rep.group_too_large = true;
  }

  auto t2 = Clock::now();
  auto u = is_uniformly_transitive(aut, budgets);
  rep.ms_uvt = detail::ms_since(t2);
  rep.uvt = u.verdict;
  rep.uvt_method = u.method;
  rep.witness = u.witness;
  rep.omega_id = u.omega_id;
  rep.omega_lower = u.omega_lower;
  rep.omega_upper = u.omega_upper;
  rep.omega_deficit = u.omega_deficit(n);
  if (u.verdict == Verdict::kInconclusive) {
    rep.notes.push_back("uvt: " + u.reason);
    if (u.reason.find("budget") != std::string::npos) rep.clique_budget_exhausted = true;
    if (u.reason.find("cap") != std::string::npos) rep.group_too_large = true;
  }
  if (u.verdict == Verdict::kNo) rep.cayley = Verdict::kNo;

  if (u.verdict == Verdict::kInconclusive || options.factorizing_evidence) {
    auto t3 = Clock::now();
    auto f = find_factorizing_block_system(aut, budgets);
    rep.ms_factorizing = detail::ms_since(t3);
    rep.block_systems = f.systems;
    if (f.witness) {
      rep.factorizing = "found";
      rep.factorizing_witness = f.witness;
      if (rep.uvt == Verdict::kInconclusive) {
        rep.uvt = Verdict::kYes;
        rep.uvt_method = "factorizing";
        rep.witness = f.witness->product;
        rep.omega_id = n - 1;
        rep.omega_deficit = 0;
      }
    } else if (!f.reason.empty()) {
      rep.factorizing = "inconclusive";
      rep.notes.push_back("factorizing: " + f.reason);
    } else if (f.primitive) {
      rep.factorizing = "primitive";
    } else {
      rep.factorizing = f.exhaustive ? "none" : "inconclusive";
    }
  }
  rep.check_invariants();
  return rep;
}

}  // namespace uvt

#endif  // UVT_CLASSIFY_HPP
