#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "suites.hpp"
#include "uvt/automorphism.hpp"
#include "uvt/classify.hpp"

using namespace uvt;

namespace {

PermGroup s5() { return PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1}})}); }

std::vector<std::vector<int>> images(const std::vector<Perm>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.image_vector());
  return out;
}

long deficit(const PermGroup& g) {
  auto u = is_uniformly_transitive(g);
  EXPECT_EQ(u.verdict, Verdict::kNo);
  return u.omega_deficit(g.degree()).value_or(999);
}

}  // namespace

TEST(IsUvt, NamedGraphs) {
  auto p = is_uvt(petersen());
  EXPECT_TRUE(p.vertex_transitive);
  EXPECT_EQ(p.aut_order, "120");
  EXPECT_EQ(p.cayley, Verdict::kNo);
  EXPECT_EQ(p.uvt, Verdict::kYes);
  EXPECT_EQ(p.omega_id, 9u);
  EXPECT_EQ(p.omega_deficit, 0);
  ASSERT_TRUE(p.witness.has_value());
  EXPECT_TRUE(oracle::sums_to_all_ones(p.witness->perms, 10));
  EXPECT_EQ(p.factorizing, "primitive");

  auto c5 = is_uvt(cycle_graph(5));
  EXPECT_EQ(c5.cayley, Verdict::kYes);
  EXPECT_EQ(c5.uvt, Verdict::kYes);
  EXPECT_EQ(c5.uvt_method, "regular-subgroup");
  EXPECT_EQ(c5.connection_set, (std::vector<int>{1, 4}));

  auto lp = is_uvt(line_graph(petersen()));
  EXPECT_EQ(lp.cayley, Verdict::kNo);
  EXPECT_EQ(lp.uvt, Verdict::kNo);
  EXPECT_EQ(lp.omega_id, 12u);
  EXPECT_EQ(lp.omega_deficit, -2);

  auto j62 = is_uvt(johnson(6, 2));
  EXPECT_EQ(j62.uvt, Verdict::kNo);
  EXPECT_EQ(j62.omega_deficit, -2);

  auto path = is_uvt(path_graph(4));
  EXPECT_FALSE(path.vertex_transitive);
  EXPECT_EQ(path.uvt, Verdict::kNo);
  EXPECT_EQ(path.factorizing, "not_applicable");
}

TEST(IsUvt, ChainInvariantsOnSmallGraphs) {
  for (const auto& [name, g] : suites::small_vt_graphs()) {
    auto r = is_uvt(g);
    EXPECT_NO_THROW(r.check_invariants()) << name;
    EXPECT_TRUE(r.vertex_transitive) << name;
    if (r.cayley == Verdict::kYes) EXPECT_EQ(r.uvt, Verdict::kYes) << name;
    if (r.uvt == Verdict::kYes) {
      ASSERT_TRUE(r.witness.has_value()) << name;
      EXPECT_TRUE(oracle::sums_to_all_ones(r.witness->perms, g.order())) << name;
      auto aut = automorphism_group(g);
      for (const auto& s : r.witness->perms) EXPECT_TRUE(aut.contains(s)) << name;
    }
    if (r.omega_id) EXPECT_LE(*r.omega_id, g.order() - 1) << name;
  }
}

TEST(IsUvt, AgreesWithBruteForce) {
  auto r = suites::uvt_vs_brute_force();
  EXPECT_TRUE(r.passed(100)) << r.summary();
}

TEST(IsUvt, CheckInvariantsRejectsBadReports) {
  ClassificationReport r;
  r.vertex_transitive = true;
  r.cayley = Verdict::kYes;
  r.uvt = Verdict::kNo;
  EXPECT_THROW(r.check_invariants(), std::logic_error);
  r.uvt = Verdict::kYes;
  EXPECT_THROW(r.check_invariants(), std::logic_error);  // no witness
  r.witness = SchurSet{{Perm(2), Perm::from_cycles(2, {{0, 1}})}, 1, 2};
  EXPECT_NO_THROW(r.check_invariants());
  r.vertex_transitive = false;
  EXPECT_THROW(r.check_invariants(), std::logic_error);
}

TEST(IsUvt, BudgetExhaustionIsReported) {
  ClassifyOptions opts;
  opts.budgets.clique_nodes = 1;
  opts.budgets.regular_nodes = 1;
  opts.factorizing_evidence = false;
  auto r = is_uvt(line_graph(petersen()), opts);
  EXPECT_NE(r.cayley, Verdict::kYes);
  EXPECT_TRUE(r.regular_budget_exhausted || r.clique_budget_exhausted);
  EXPECT_NO_THROW(r.check_invariants());
  ClassifyOptions tiny;
  tiny.budgets.max_group = 10;
  auto t = is_uvt(petersen(), tiny);
  EXPECT_TRUE(t.group_too_large);
  EXPECT_NE(t.uvt, Verdict::kNo);
}

TEST(UniformTransitivity, MatchesSharplyTransitiveSearch) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 150; ++i) {
    auto g = suites::random_transitive_group(rng, 3, 8, 400);
    auto u = is_uniformly_transitive(g);
    ASSERT_NE(u.verdict, Verdict::kInconclusive);
    const bool expected = oracle::has_sharply_transitive_subset(images(g.elements()), g.degree());
    EXPECT_EQ(u.verdict == Verdict::kYes, expected) << "degree " << g.degree() << " order " << g.order_string();
    if (u.witness) EXPECT_TRUE(oracle::every_pair_reached_once(u.witness->perms, g.degree()));
    if (u.verdict == Verdict::kNo) EXPECT_LT(*u.omega_id, g.degree() - 1);
  }
}

TEST(UniformTransitivity, RequiresTransitivity) {
  EXPECT_THROW(is_uniformly_transitive(PermGroup(4, {Perm::from_cycles(4, {{0, 1}})})), std::invalid_argument);
  EXPECT_EQ(is_uniformly_transitive(PermGroup(1)).verdict, Verdict::kYes);
}

TEST(UniformTransitivity, OmegaDeficitSpotChecks) {
  auto a5 = alternating_group_a5();
  PermGroup c3(5, {Perm::from_cycles(5, {{0, 1, 2}})});
  PermGroup c2(5, {Perm::from_cycles(5, {{0, 1}, {2, 3}})});
  PermGroup d8(5, {Perm::from_cycles(5, {{0, 1, 2, 3}}), Perm::from_cycles(5, {{0, 2}})});
  EXPECT_EQ(deficit(coset_action(a5, c3)), -10);
  EXPECT_EQ(deficit(coset_action(a5, c2)), -17);
  EXPECT_EQ(deficit(coset_action(s5(), d8)), -2);

  // S5 on 30 points: the three classes of subgroups of order 4.
  std::vector<long> s5_30 = {
      deficit(coset_action(s5(), PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2, 3}})}))),
      deficit(coset_action(s5(), PermGroup(5, {Perm::from_cycles(5, {{0, 1}, {2, 3}}),
                                                 Perm::from_cycles(5, {{0, 2}, {1, 3}})}))),
      deficit(coset_action(s5(), PermGroup(5, {Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{2, 3}})}))),
  };
  EXPECT_EQ(s5_30, (std::vector<long>{-17, -4, -14}));

  // 2 x A5 on the cosets of a diagonal S3.
  PermGroup a5x2(7, {Perm::from_cycles(7, {{0, 1, 2, 3, 4}}), Perm::from_cycles(7, {{0, 1, 2}}),
                     Perm::from_cycles(7, {{5, 6}})});
  PermGroup diag(7, {Perm::from_cycles(7, {{0, 1, 2}}), Perm::from_cycles(7, {{0, 1}, {3, 4}, {5, 6}})});
  auto act = coset_action_detailed(a5x2, diag);
  ASSERT_TRUE(act.faithful);
  EXPECT_EQ(act.group.degree(), 20u);
  EXPECT_EQ(deficit(act.group), -8);
}

TEST(UniformTransitivity, RegularGroupsShortCircuit) {
  auto u = is_uniformly_transitive(PermGroup(7, {Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})}));
  EXPECT_EQ(u.verdict, Verdict::kYes);
  EXPECT_EQ(u.method, "regular");
  EXPECT_EQ(u.omega_deficit(7), 0);
}

// ---------------------------------------------------------------------------

TEST(Factorizing, CompleteBipartite) {
  auto k33 = automorphism_group(complete_bipartite(3, 3));
  auto f = find_factorizing_block_system(k33);
  ASSERT_TRUE(f.witness.has_value());
  const auto& w = *f.witness;
  EXPECT_EQ(w.system.block_count(), 2u);
  EXPECT_EQ(w.inner.size(), 3u);
  EXPECT_EQ(w.outer.size(), 2u);
  EXPECT_TRUE(w.product.verify());
  EXPECT_TRUE(oracle::sums_to_all_ones(w.product.perms, 6));
  for (std::size_t i = 0; i < w.inner.size(); ++i)
    for (std::size_t j = i + 1; j < w.inner.size(); ++j) EXPECT_TRUE(schur_orthogonal(w.inner[i], w.inner[j]));
  for (const auto& p : w.product.perms) EXPECT_TRUE(k33.contains(p));
}

TEST(Factorizing, RegularFixtures) {
  for (const auto& [name, g] : suites::regular_block_fixtures()) {
    auto f = find_factorizing_block_system(g);
    EXPECT_FALSE(f.primitive) << name;
    ASSERT_TRUE(f.witness.has_value()) << name;
    EXPECT_TRUE(f.witness->product.verify()) << name;
    EXPECT_EQ(f.systems.back().outcome, SystemOutcome::kFactorizing) << name;
  }
}

TEST(Factorizing, PrimitiveGroupsHaveNoSystems) {
  auto f = find_factorizing_block_system(automorphism_group(petersen()));
  EXPECT_TRUE(f.primitive);
  EXPECT_FALSE(f.witness.has_value());
  EXPECT_TRUE(f.systems.empty());
}

TEST(Factorizing, WitnessImpliesUniform) {
  // A factorizing system always yields a maximal Schur set.
  std::mt19937_64 rng(52);
  std::size_t found = 0;
  for (int i = 0; i < 120; ++i) {
    auto g = suites::random_transitive_group(rng, 4, 10, 600);
    auto f = find_factorizing_block_system(g);
    if (!f.witness) continue;
    ++found;
    EXPECT_TRUE(f.witness->product.verify());
    for (const auto& p : f.witness->product.perms) EXPECT_TRUE(g.contains(p));
    EXPECT_EQ(is_uniformly_transitive(g).verdict, Verdict::kYes);
  }
  for (const auto& [name, gr] : suites::small_vt_graphs()) {
    auto r = is_uvt(gr);
    if (r.factorizing == "found") EXPECT_EQ(r.uvt, Verdict::kYes) << name;
  }
  EXPECT_GT(found, 10u);
}

TEST(Factorizing, OrthogonalSubset) {
  bool inconclusive = true;
  auto c6 = PermGroup(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  auto s = orthogonal_subset(c6, 6, {}, inconclusive);
  EXPECT_FALSE(inconclusive);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(is_k_uniform_sum(*s, 1));
  EXPECT_FALSE(orthogonal_subset(c6, 7, {}, inconclusive).has_value());
  EXPECT_TRUE(orthogonal_subset(c6, 0, {}, inconclusive)->empty());
}

TEST(SimpleGroupObstruction, Examples) {
  auto a5 = alternating_group_a5();
  PermGroup c3(5, {Perm::from_cycles(5, {{0, 1, 2}})});
  EXPECT_TRUE(check_simple_group_obstruction(coset_action(a5, c3), true));
  EXPECT_FALSE(check_simple_group_obstruction(PermGroup(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})}), false));
  EXPECT_TRUE(check_simple_group_obstruction(a5, true));
}

TEST(A5Actions, NoInvariantGraphHasAutomorphismGroupA5) {
  auto actions = a5_primitive_actions();
  ASSERT_EQ(actions.size(), 3u);
  std::vector<std::size_t> degrees;
  for (const auto& a : actions) {
    degrees.push_back(a.group.degree());
    EXPECT_TRUE(a.ok) << a.name;
    EXPECT_EQ(a.aut_orders.size(), a.invariant_graphs);
    for (const auto& o : a.aut_orders) EXPECT_NE(o, "60") << a.name;
  }
  EXPECT_EQ(degrees, (std::vector<std::size_t>{5, 6, 10}));
  EXPECT_TRUE(verify_a5_imprimitivity());
}
