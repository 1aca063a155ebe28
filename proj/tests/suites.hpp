#pragma once

// Randomized cross-check suites. Each returns how many instances ran and
// how many disagreed with the reference.

#include <cstddef>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "uvt/automorphism.hpp"
#include "uvt/cayley.hpp"
#include "uvt/classify.hpp"
#include "uvt/clique.hpp"
#include "uvt/graph6.hpp"

namespace suites {

struct Outcome {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++instances;
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool passed(std::size_t at_least = 1) const { return failures == 0 && instances >= at_least; }
  std::string summary() const {
    std::ostringstream s;
    s << instances << " instances, " << failures << " failures";
    if (failures) s << " (first: " << first_failure << ")";
    return s.str();
  }
};

inline uvt::OracleGraph oracle_graph(const uvt::Graph& g) {
  return uvt::OracleGraph(g.order(), [&g](std::size_t a, std::size_t b) { return g.adjacent(a, b); });
}

inline bool is_clique(const uvt::Graph& g, const std::vector<std::size_t>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  return true;
}

/// max_clique against subset enumeration: 500 random graphs on at most 10
/// vertices and every labeled graph on at most 5 vertices.
inline Outcome clique_vs_brute_force(std::uint64_t seed = 1) {
  Outcome out;
  std::mt19937_64 rng(seed);
  auto one = [&](const uvt::Graph& g, const std::string& label) {
    auto r = uvt::max_clique(oracle_graph(g));
    const auto expected = oracle::clique_number(oracle::adjacency(g));
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    bool ok = r.complete() && r.clique.size() == expected && is_clique(g, r.clique) &&
              uvt::greedy_color_bound(oracle_graph(g), all) >= expected;
    out.check(ok, label + " expected " + std::to_string(expected) + " got " + std::to_string(r.clique.size()));
  };
  std::uniform_int_distribution<std::size_t> size(1, 10);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int i = 0; i < 500; ++i) {
    auto g = oracle::random_graph(size(rng), density(rng), rng);
    one(g, "random #" + std::to_string(i));
  }
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * (n - 1) / 2)); ++m)
      one(oracle::graph_from_mask(n, m), "n=" + std::to_string(n) + " mask=" + std::to_string(m));
  return out;
}

/// Automorphism group order against an n! scan on 200 random graphs, n <= 8.
inline Outcome automorphisms_vs_brute_force(std::uint64_t seed = 2) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = i < 50 ? 8 : size(rng);
    auto g = oracle::random_graph(n, i % 7 == 0 ? 0.5 : density(rng), rng);
    auto gens = uvt::automorphism_generators(g);
    bool gens_ok = true;
    for (const auto& s : gens) gens_ok = gens_ok && uvt::is_automorphism(g, s);
    auto order = uvt::PermGroup(n, gens).order();
    auto expected = oracle::all_automorphisms(g).size();
    out.check(gens_ok && order == expected,
              uvt::write_graph6(g) + " expected " + std::to_string(expected) + " got " + order.str());
  }
  return out;
}

/// is_uvt against exhaustive search over Aut on every vertex-transitive
/// labeled graph with at most 6 vertices. The clique route is also run
/// directly so that the Cayley shortcut does not hide it.
inline Outcome uvt_vs_brute_force() {
  Outcome out;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * (n - 1) / 2)); ++m) {
      auto g = oracle::graph_from_mask(n, m);
      auto auts = oracle::all_automorphisms(g);
      std::vector<bool> reached(n, false);
      for (const auto& a : auts) reached[a[0]] = true;
      if (std::find(reached.begin(), reached.end(), false) != reached.end()) continue;
      const bool expected = oracle::has_sharply_transitive_subset(auts, n);
      auto report = uvt::is_uvt(g);
      auto direct = uvt::is_uniformly_transitive(uvt::automorphism_group(g));
      const auto want = expected ? uvt::Verdict::kYes : uvt::Verdict::kNo;
      out.check(report.vertex_transitive && report.uvt == want && direct.verdict == want,
                "n=" + std::to_string(n) + " mask=" + std::to_string(m));
    }
  return out;
}

// ---------------------------------------------------------------------------

/// Transitive groups on 2..max_degree points from random generators.
inline uvt::PermGroup random_transitive_group(std::mt19937_64& rng, std::size_t min_degree, std::size_t max_degree,
                                              std::size_t max_order = 5040) {
  std::uniform_int_distribution<std::size_t> deg(min_degree, max_degree);
  std::uniform_int_distribution<int> gens(1, 3);
  for (;;) {
    const std::size_t n = deg(rng);
    std::vector<uvt::Perm> g;
    for (int i = gens(rng); i > 0; --i) g.push_back(oracle::random_perm(n, rng));
    uvt::PermGroup group(n, g);
    if (group.is_transitive() && group.order() <= max_order) return group;
  }
}

/// n permutations of n points: sharply transitive sets built from Latin
/// squares of random group tables, a perturbed copy, or random sets.
inline std::vector<uvt::Perm> random_candidate_set(std::size_t n, std::mt19937_64& rng, int kind) {
  std::vector<uvt::Perm> s;
  if (kind == 0) {
    for (std::size_t i = 0; i < n; ++i) s.push_back(oracle::random_perm(n, rng));
    return s;
  }
  // Rows of the cyclic Latin square, relabeled on both sides.
  auto a = oracle::random_perm(n, rng), b = oracle::random_perm(n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> img(n);
    for (std::size_t u = 0; u < n; ++u) img[u] = static_cast<int>((u + i) % n);
    s.push_back(uvt::compose(a, uvt::compose(uvt::Perm::from_images(img), b)));
  }
  if (kind == 2 && n > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    s[pick(rng)] = oracle::random_perm(n, rng);
  }
  return s;
}

/// Sum test, existence test and uniqueness test agree on every set.
inline Outcome three_conditions_agree(std::size_t count = 1500, std::uint64_t seed = 3) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> deg(1, 7);
  std::size_t positives = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = deg(rng);
    auto s = random_candidate_set(n, rng, static_cast<int>(i % 3));
    const bool a = oracle::sums_to_all_ones(s, n);
    const bool b = oracle::every_pair_reached(s, n);
    const bool c = oracle::every_pair_reached_once(s, n);
    const bool lib = uvt::is_k_uniform_sum(s, 1);
    positives += a;
    out.check(a == b && b == c && c == lib, "set #" + std::to_string(i));
  }
  out.check(positives > count / 4, "too few positive instances");
  return out;
}

/// Schur orthogonality: the pointwise test, the derangement test on
/// inverse(s) o t, and the entrywise matrix product all agree; the relation
/// is symmetric and invariant under left translation.
inline Outcome orthogonality_predicates_agree(std::size_t count = 2000, std::uint64_t seed = 4) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> deg(1, 9);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = deg(rng);
    auto s = oracle::random_perm(n, rng), t = oracle::random_perm(n, rng), a = oracle::random_perm(n, rng);
    if (i % 4 == 0) t = uvt::compose(s, oracle::random_perm(n, rng));
    const bool direct = uvt::schur_orthogonal(s, t);
    const bool via_der = uvt::is_derangement(uvt::compose(uvt::inverse(s), t));
    auto ms = oracle::perm_matrix(s.image_vector()), mt = oracle::perm_matrix(t.image_vector());
    bool zero = true;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) zero = zero && ms[u][v] * mt[u][v] == 0;
    const bool sym = uvt::schur_orthogonal(t, s) == direct;
    const bool trans = uvt::schur_orthogonal(uvt::compose(a, s), uvt::compose(a, t)) == direct;
    out.check(direct == via_der && via_der == zero && sym && trans, "pair #" + std::to_string(i));
  }
  return out;
}

struct WitnessFixture {
  std::string name;
  uvt::PermGroup group;
  uvt::SchurSet witness;
};

inline std::vector<WitnessFixture> uniform_witness_fixtures() {
  std::vector<WitnessFixture> out;
  auto add = [&](std::string name, const uvt::Graph& g) {
    auto aut = uvt::automorphism_group(g);
    auto r = uvt::is_uniformly_transitive(aut);
    if (r.witness) out.push_back({std::move(name), aut, *r.witness});
  };
  add("petersen", uvt::petersen());
  add("J(5,2)", uvt::johnson(5, 2));
  add("K3,3", uvt::complete_bipartite(3, 3));
  add("C6", uvt::cycle_graph(6));
  add("K5", uvt::complete_graph(5));
  add("circulant(10;2,5)", uvt::circulant(10, {2, 5}));
  add("cube", uvt::line_graph(uvt::complete_bipartite(2, 4)));
  add("J(7,2)", uvt::johnson(7, 2));
  return out;
}

/// Left translates of maximal Schur sets are maximal Schur sets.
inline Outcome translation_closure(std::size_t count = 1200, std::uint64_t seed = 5) {
  Outcome out;
  std::mt19937_64 rng(seed);
  auto fixtures = uniform_witness_fixtures();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& f = fixtures[i % fixtures.size()];
    auto alpha = f.group.random_element(rng);
    uvt::SchurSet moved{{}, 1, f.witness.degree};
    for (const auto& p : f.witness.perms) moved.perms.push_back(uvt::compose(alpha, p));
    out.check(f.witness.verify() && moved.verify() && f.group.contains(alpha), f.name + " #" + std::to_string(i));
  }
  return out;
}

/// omega(D(G)) = omega(D(G)_id) + 1 for random groups of order at most 500.
inline Outcome omega_relation(std::size_t count = 1000, std::uint64_t seed = 6) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> deg(2, 7);
  std::uniform_int_distribution<int> gens(1, 2);
  while (out.instances < count) {
    const std::size_t n = deg(rng);
    std::vector<uvt::Perm> g;
    for (int i = gens(rng); i > 0; --i) g.push_back(oracle::random_perm(n, rng));
    uvt::PermGroup group(n, g);
    if (group.order() > 500) continue;
    auto elements = group.elements();
    std::vector<uvt::Perm> der;
    for (auto i : uvt::derangement_indices(elements)) der.push_back(elements[i]);
    auto whole = uvt::max_clique(uvt::derangement_graph(elements));
    auto local = uvt::max_clique(uvt::derangement_neighbourhood(der));
    out.check(whole.complete() && local.complete() && whole.clique.size() == local.clique.size() + 1,
              "degree " + std::to_string(n) + " order " + group.order_string());
  }
  return out;
}

inline std::vector<std::pair<std::string, uvt::Graph>> small_vt_graphs() {
  using namespace uvt;
  return {{"C4", cycle_graph(4)},        {"C5", cycle_graph(5)},          {"C6", cycle_graph(6)},
          {"C7", cycle_graph(7)},        {"K4", complete_graph(4)},       {"K5", complete_graph(5)},
          {"K3,3", complete_bipartite(3, 3)}, {"K4,4", complete_bipartite(4, 4)}, {"petersen", petersen()},
          {"J(5,2)", johnson(5, 2)},     {"line(petersen)", line_graph(petersen())}, {"J(6,2)", johnson(6, 2)},
          {"circulant(8;1,4)", circulant(8, {1, 4})}, {"circulant(10;2,5)", circulant(10, {2, 5})},
          {"circulant(9;1,3)", circulant(9, {1, 3})}, {"prism", line_graph(complete_bipartite(2, 3))},
          {"cube", line_graph(complete_bipartite(2, 4))}, {"octahedron", complement(circulant(6, {3}))},
          {"2K3", complement(complete_bipartite(3, 3))}, {"K6", complete_graph(6)}};
}

/// The whole automorphism group of a vertex-transitive graph sums to s*J_n,
/// s the stabilizer order: 20 named graphs plus random transitive groups.
inline Outcome whole_group_sums(std::size_t count = 1000, std::uint64_t seed = 7) {
  Outcome out;
  for (const auto& [name, g] : small_vt_graphs()) {
    auto aut = uvt::automorphism_group(g);
    auto elems = aut.elements();
    const auto s = static_cast<std::size_t>(aut.stabilizer_order());
    out.check(uvt::is_k_uniform_sum(elems, s) && !uvt::is_k_uniform_sum(elems, s + 1), name);
  }
  std::mt19937_64 rng(seed);
  while (out.instances < count) {
    auto group = random_transitive_group(rng, 2, 7);
    auto elems = group.elements();
    const auto s = static_cast<std::size_t>(group.stabilizer_order());
    out.check(uvt::is_k_uniform_sum(elems, s), "random degree " + std::to_string(group.degree()));
  }
  return out;
}

/// G minus a k-maximal Schur set is (s-k)-maximal, for witnesses found by
/// k_uvt on small transitive groups.
inline Outcome complement_witnesses(std::size_t count = 1000, std::uint64_t seed = 8) {
  Outcome out;
  std::mt19937_64 rng(seed);
  uvt::Budgets budgets;
  budgets.cover_nodes = 200'000;
  while (out.instances < count) {
    auto group = random_transitive_group(rng, 2, 6, 720);
    const auto s = static_cast<std::size_t>(group.stabilizer_order());
    if (s < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(1, s - 1);
    const std::size_t k = pick(rng);
    auto r = uvt::k_uvt(group, k, budgets);
    if (!r.witness) continue;
    auto c = uvt::complement_schur_set(group, *r.witness);
    out.check(c.k == s - k && c.perms.size() == (s - k) * group.degree() && c.verify(),
              "degree " + std::to_string(group.degree()) + " k=" + std::to_string(k));
  }
  return out;
}

inline std::vector<std::pair<std::string, uvt::Graph>> cayley_fixtures() {
  using namespace uvt;
  return {{"C4", cycle_graph(4)},         {"C5", cycle_graph(5)},           {"C6", cycle_graph(6)},
          {"K4", complete_graph(4)},      {"K3,3", complete_bipartite(3, 3)}, {"cube", line_graph(complete_bipartite(2, 4))},
          {"circulant(8;1,4)", circulant(8, {1, 4})}, {"circulant(10;2,5)", circulant(10, {2, 5})},
          {"prism", line_graph(complete_bipartite(2, 3))}, {"J(7,2)", johnson(7, 2)}};
}

/// Unions of k left cosets of a regular subgroup are k-maximal for every k,
/// and stay so under random left translation.
inline Outcome coset_unions(std::size_t count = 1000, std::uint64_t seed = 9) {
  Outcome out;
  std::mt19937_64 rng(seed);
  struct Item {
    std::string name;
    uvt::PermGroup aut;
    uvt::PermGroup regular;
    std::size_t s;
  };
  std::vector<Item> items;
  for (const auto& [name, g] : cayley_fixtures()) {
    auto aut = uvt::automorphism_group(g);
    auto r = uvt::find_regular_subgroup(aut, g.order());
    if (!r.subgroup) {
      out.check(false, name + " has no regular subgroup");
      continue;
    }
    items.push_back({name, aut, *r.subgroup, static_cast<std::size_t>(aut.stabilizer_order())});
  }
  for (const auto& it : items)
    for (std::size_t k = 1; k <= it.s; ++k) {
      auto set = uvt::cayley_k_schur(it.aut, it.regular, k);
      out.check(set.verify() && set.perms.size() == k * it.aut.degree(), it.name + " k=" + std::to_string(k));
    }
  while (out.instances < count) {
    const auto& it = items[out.instances % items.size()];
    std::uniform_int_distribution<std::size_t> pick(1, it.s);
    const std::size_t k = pick(rng);
    auto set = uvt::cayley_k_schur(it.aut, it.regular, k);
    auto alpha = it.aut.random_element(rng);
    uvt::SchurSet moved{{}, k, it.aut.degree()};
    for (const auto& p : set.perms) moved.perms.push_back(uvt::compose(alpha, p));
    out.check(moved.verify(), it.name + " translated k=" + std::to_string(k));
  }
  return out;
}

// ---------------------------------------------------------------------------

/// A group acting regularly on itself: the left regular representation
/// given by a multiplication table.
inline uvt::PermGroup left_regular(const uvt::MulTable& t) {
  std::vector<uvt::Perm> gens;
  for (std::size_t a = 0; a < t.order(); ++a) {
    std::vector<int> img(t.order());
    for (std::size_t b = 0; b < t.order(); ++b) img[b] = t.at(a, b);
    gens.push_back(uvt::Perm::from_images(img));
  }
  return uvt::PermGroup(t.order(), gens);
}

inline uvt::MulTable direct_product(const uvt::MulTable& a, const uvt::MulTable& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = static_cast<int>(a.at(x / b.order(), y / b.order()) * b.order() + b.at(x % b.order(), y % b.order()));
  return uvt::MulTable(std::move(t));
}

/// Dihedral group of order 2m: element (r, f) is rot^r ref^f.
inline uvt::MulTable dihedral_table(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t r1 = x / 2, f1 = x % 2, r2 = y / 2, f2 = y % 2;
      std::size_t r = f1 ? (r1 + m - r2) % m : (r1 + r2) % m;
      t[x][y] = static_cast<int>(2 * r + (f1 ^ f2));
    }
  return uvt::MulTable(std::move(t));
}

inline std::vector<std::pair<std::string, uvt::PermGroup>> regular_block_fixtures() {
  return {{"Z6", left_regular(uvt::cyclic_table(6))},
          {"Z8", left_regular(uvt::cyclic_table(8))},
          {"Z2^3", left_regular(direct_product(uvt::cyclic_table(2), direct_product(uvt::cyclic_table(2), uvt::cyclic_table(2))))},
          {"D8", left_regular(dihedral_table(4))},
          {"Z3xZ3", left_regular(direct_product(uvt::cyclic_table(3), uvt::cyclic_table(3)))},
          {"D12", left_regular(dihedral_table(6))}};
}

}  // namespace suites
