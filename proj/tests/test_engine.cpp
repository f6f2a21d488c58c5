#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "cec/engine.hpp"
#include "cec/errors.hpp"
#include "cec/families.hpp"
#include "cec/multigraph.hpp"
#include "cec/oracle.hpp"
#include "support/reference.hpp"

using namespace cec;

namespace {

Poly P(std::initializer_list<int> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return Poly(std::move(v));
}

std::vector<FamilySpec> small_families() {
  return {{Family::complete, {5}},        {Family::complete, {6}},     {Family::wheel, {7}},
          {Family::fan, {7}},             {Family::cocktail_party, {3}}, {Family::hypercube, {3}},
          {Family::turan, {7, 3}},        {Family::lollipop, {4, 3}},  {Family::friendship, {3}},
          {Family::complete_bipartite, {3, 4}}, {Family::cycle, {10}}, {Family::complete_multipartite, {3, 2, 1}}};
}

}  // namespace

TEST(Engine, Conventions) {
  EXPECT_EQ(cec_poly_engine(Graph()), Poly::constant(1));
  EXPECT_TRUE(cec_poly_engine(Graph(4, {{0, 1}, {2, 3}})).is_zero());
  EXPECT_EQ(cec_poly_engine(generate({Family::path, {9}})), Poly::monomial(8));
}

TEST(Engine, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const double p = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = reference::random_graph(rng, n, p);
    if (g.edge_count() > 22) continue;
    EXPECT_EQ(cec_poly_engine(g), cec_poly_oracle(g)) << serialize_edge_list(g);
  }
}

TEST(Engine, MatchesOracleOnFamilies) {
  for (const auto& spec : small_families()) {
    Graph g = generate(spec);
    EXPECT_EQ(cec_poly_engine(g), cec_poly_oracle(g, {26, 1, 8})) << to_string(spec);
  }
}

TEST(Engine, IndependentOfEdgeSelection) {
  for (const auto& spec : small_families()) {
    Graph g = generate(spec);
    const Poly base = cec_poly_engine(g);
    for (auto sel : {EdgeSelection::first, EdgeSelection::random}) {
      for (std::uint64_t seed : {1u, 2u, 99u}) {
        EngineConfig cfg;
        cfg.selection = sel;
        cfg.seed = seed;
        EXPECT_EQ(cec_poly_engine(g, cfg), base) << to_string(spec);
      }
    }
  }
}

TEST(Engine, IndependentOfWorkersAndCanonicalLimits) {
  for (const auto& spec : {FamilySpec{Family::hypercube, {4}}, FamilySpec{Family::complete, {8}},
                           FamilySpec{Family::turan, {9, 4}}}) {
    Graph g = generate(spec);
    const Poly base = cec_poly_engine(g);
    for (int workers : {2, 4}) {
      EngineConfig cfg;
      cfg.workers = workers;
      EXPECT_EQ(cec_poly_engine(g, cfg), base) << to_string(spec);
    }
    EngineConfig coarse;
    coarse.canonical.exact_max_vertices = 0;
    EXPECT_EQ(cec_poly_engine(g, coarse), base) << to_string(spec);
    EngineConfig capped;
    capped.canonical.max_leaves = 1;
    EXPECT_EQ(cec_poly_engine(g, capped), base) << to_string(spec);
  }
}

TEST(Engine, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (const auto& spec : small_families()) {
    Graph g = generate(spec);
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(cec_poly_engine(reference::relabel(g, perm)), cec_poly_engine(g)) << to_string(spec);
  }
}

TEST(Engine, Budgets) {
  Graph g = generate({Family::hypercube, {4}});
  EngineConfig steps;
  steps.max_steps = 10;
  EXPECT_THROW(cec_poly_engine(g, steps), ResourceLimit);
  EngineConfig memo;
  memo.max_memo_entries = 5;
  EXPECT_THROW(cec_poly_engine(g, memo), ResourceLimit);
  EngineConfig bad;
  bad.workers = 0;
  EXPECT_THROW(cec_poly_engine(g, bad), InvalidParameter);
}

TEST(Engine, Stats) {
  EngineStats stats;
  cec_poly_engine(generate({Family::hypercube, {4}}), {}, &stats);
  EXPECT_GT(stats.misses, 0u);
  EXPECT_GT(stats.hits, 0u);
  EXPECT_GE(stats.peak_entries, 1u);
  EXPECT_GE(stats.steps, stats.misses);
}

TEST(Engine, Multigraphs) {
  MultiGraph bundle(2);
  bundle.add_edge(0, 1, 3);
  EXPECT_EQ(cec_poly_engine(bundle), P({0, 3, 3, 1}));

  MultiGraph looped(1);
  looped.add_edge(0, 0, 2);
  EXPECT_EQ(cec_poly_engine(looped), P({1, 2, 1}));

  // doubled triangle: connected spanning subsets of a multigraph with 6 edges
  MultiGraph tri(3);
  tri.add_edge(0, 1, 2);
  tri.add_edge(1, 2, 2);
  tri.add_edge(0, 2, 2);
  Poly expected;
  {
    std::vector<Edge> edges = {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}};
    std::vector<std::uint64_t> counts(7, 0);
    for (int mask = 0; mask < 64; ++mask) {
      std::vector<Edge> chosen;
      for (int i = 0; i < 6; ++i)
        if (mask >> i & 1) chosen.push_back(edges[i]);
      if (reference::spans_connected(3, chosen)) ++counts[chosen.size()];
    }
    expected = reference::to_poly(counts);
  }
  EXPECT_EQ(cec_poly_engine(tri), expected);
}

TEST(Multigraph, Contraction) {
  MultiGraph g = MultiGraph::from_graph(generate({Family::cycle, {4}}));
  MultiGraph c = g.contracted(0, 1);
  EXPECT_EQ(c.vertex_count(), 3);
  EXPECT_EQ(c.loops(0), 1);
  EXPECT_EQ(c.edge_count(), 4u);
  EXPECT_TRUE(c.is_connected());
  EXPECT_THROW(g.contracted(2, 2), InvalidParameter);
}

TEST(CanonicalKey, IsomorphicGraphsShareKeys) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g = reference::random_graph(rng, n, 0.5);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    MemoKey a = canonical_key(MultiGraph::from_graph(g));
    MemoKey b = canonical_key(MultiGraph::from_graph(reference::relabel(g, perm)));
    ASSERT_TRUE(a.exact);
    EXPECT_EQ(a, b) << serialize_edge_list(g);
  }
}

TEST(CanonicalKey, DistinguishesNonIsomorphicGraphs) {
  MemoKey path = canonical_key(MultiGraph::from_graph(generate({Family::path, {4}})));
  MemoKey star = canonical_key(MultiGraph::from_graph(generate({Family::star, {3}})));
  EXPECT_NE(path, star);
  MultiGraph a(3), b(3);
  a.add_edge(0, 1, 2);
  a.add_edge(1, 2, 1);
  b.add_edge(0, 1, 1);
  b.add_edge(1, 2, 1);
  b.add_edge(0, 0, 1);
  EXPECT_NE(canonical_key(a), canonical_key(b));
}

TEST(SpanningTrees, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Graph g = reference::random_graph(rng, n, 0.6);
    if (g.edge_count() > 16) continue;
    EXPECT_EQ(spanning_tree_count(g), reference::spanning_trees(g)) << serialize_edge_list(g);
  }
}

TEST(SpanningTrees, LowestCoefficientOfConnectedCovers) {
  for (const auto& spec : small_families()) {
    Graph g = generate(spec);
    EXPECT_EQ(cec_poly_engine(g).coeff(g.vertex_count() - 1), spanning_tree_count(g)) << to_string(spec);
  }
  EXPECT_EQ(spanning_tree_count(generate({Family::complete, {10}})), BigInt(100000000));
  EXPECT_EQ(spanning_tree_count(Graph(3, {{0, 1}})), 0);
  EXPECT_EQ(spanning_tree_count(Graph()), 1);
}

// Values computed once with the engine and cross-checked by exhaustive
// enumeration outside this suite.
TEST(Engine, FrozenValues) {
  EXPECT_EQ(spanning_tree_count(generate({Family::hypercube, {4}})), BigInt(42467328));
  EXPECT_EQ(cec_poly_engine(generate({Family::cocktail_party, {3}})),
            P({0, 0, 0, 0, 0, 384, 740, 744, 489, 220, 66, 12, 1}));
  EXPECT_EQ(cec_poly_engine(generate({Family::hypercube, {3}})), P({0, 0, 0, 0, 0, 0, 0, 384, 408, 212, 66, 12, 1}));
  const std::vector<int> wheel_totals = {38, 134, 462, 1582, 5406, 18462, 63038, 215230};
  for (int n = 4; n <= 11; ++n)
    EXPECT_EQ(eval_int(cec_poly_engine(generate({Family::wheel, {n}})), 1), wheel_totals[n - 4]) << n;
}
