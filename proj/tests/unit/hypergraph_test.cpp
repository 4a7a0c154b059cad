#include <gtest/gtest.h>

#include <random>

#include "motif/error.hpp"
#include "motif/hypergraph.hpp"
#include "support/generators.hpp"

namespace motif {
namespace {

Hypergraph graph_of(int n, std::vector<Block> edges) {
  Hypergraph h;
  h.n_vertices = n;
  for (auto& e : edges) h.edges.push_back({std::move(e), 0, 0});
  return h;
}

TEST(HypergraphTest, IntroIsK4) {
  const Hypergraph h = build_hypergraph(fixtures::intro_spec());
  EXPECT_EQ(h.n_vertices, 4);
  ASSERT_EQ(h.edges.size(), 6u);
  std::set<Block> edges;
  for (const auto& e : h.edges) edges.insert(e.vertices);
  EXPECT_EQ(edges, (std::set<Block>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST(HypergraphTest, K4Optimum) {
  const Hypergraph h = build_hypergraph(fixtures::intro_spec());
  const FractionalTransversal t = fractional_transversal(h);
  EXPECT_EQ(t.weight, Rational(2));
  EXPECT_TRUE(is_fractional_transversal(h, t));
  for (const auto& g : t.g) EXPECT_EQ(g, Rational(1, 2));
  const FractionalMatching m = fractional_matching(h);
  EXPECT_EQ(m.weight, Rational(2));
  EXPECT_TRUE(is_fractional_matching(h, m));
  for (const auto& f : m.f) EXPECT_EQ(f, Rational(1, 3));
  const FractionalMatching v = fractional_matching(h, MatchingChoice::Vertex);
  EXPECT_EQ(v.weight, Rational(2));
  EXPECT_TRUE(is_fractional_matching(h, v));
}

TEST(HypergraphTest, CornerOptimum) {
  const MotifSpec s = fixtures::corner_spec();
  const Hypergraph h = build_hypergraph(s);
  EXPECT_EQ(fractional_transversal(h).weight, Rational(3));
  const FractionalMatching m = fractional_matching(h);
  EXPECT_EQ(m.weight, Rational(3));
  // Singleton edges carry weight 1, the pairs carry 0.
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    EXPECT_EQ(m.f[e], h.edges[e].vertices.size() == 1 ? Rational(1) : Rational(0));
  }
}

TEST(HypergraphTest, FeasibilityCheckers) {
  const Hypergraph h = graph_of(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_fractional_transversal(h, {{0, 1, 0}, 1}));
  EXPECT_FALSE(is_fractional_transversal(h, {{1, 0, 0}, 1}));
  EXPECT_TRUE(is_fractional_matching(h, {{Rational(1, 2), Rational(1, 2)}, 1}));
  EXPECT_FALSE(is_fractional_matching(h, {{1, 1}, 2}));
  EXPECT_FALSE(is_fractional_matching(h, {{-1, 0}, -1}));
}

TEST(HypergraphTest, EmptyEdgeSet) {
  const Hypergraph h = graph_of(2, {});
  EXPECT_EQ(fractional_transversal(h).weight, Rational(0));
  EXPECT_EQ(fractional_matching(h).weight, Rational(0));
}

TEST(HypergraphTest, UniformSpecsHaveTauLOverN) {
  // Three partitions into pairs of L=6 rows: n=2 -> tau* = 3.
  const MotifSpec s = validate_spec(
      {6, 3, {{{1, 2}, {3, 4}, {5, 6}}, {{1, 3}, {2, 5}, {4, 6}}, {{1, 6}, {2, 4}, {3, 5}}}, {}});
  EXPECT_EQ(fractional_transversal(build_hypergraph(s)).weight, Rational(3));
  // Triangle partition with n=3 and L=3: tau* = 1.
  const MotifSpec t = validate_spec({3, 2, {{{1, 2, 3}}, {{1, 2, 3}}}, {}});
  EXPECT_EQ(fractional_transversal(build_hypergraph(t)).weight, Rational(1));
}

TEST(HypergraphTest, SingleStarredSpecsHaveTauL) {
  const MotifSpec s = validate_spec({2, 2, {{{1}, {2}}, {{1, 2}}}, {}});
  EXPECT_EQ(fractional_transversal(build_hypergraph(s)).weight, Rational(2));
}

TEST(HypergraphTest, DistinctTableauRows) {
  const MotifSpec intro = fixtures::intro_spec();
  EXPECT_EQ(distinct_tableau_rows(intro, fractional_matching(build_hypergraph(intro))), 1);
  const MotifSpec corner = fixtures::corner_spec();
  EXPECT_EQ(distinct_tableau_rows(corner, fractional_matching(build_hypergraph(corner))), 3);
  const MotifSpec one = validate_spec({1, 1, {{{1}}}, {}});
  EXPECT_EQ(distinct_tableau_rows(one, fractional_matching(build_hypergraph(one))), 1);
}

// Independent oracle: any feasible matching weight is at most any feasible transversal weight,
// so a feasible pair of equal weight certifies both optima.
TEST(HypergraphTest, StrongDualityOnRandomSpecs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const MotifSpec s = testing::random_spec(rng, 5, 4, 0.2);
    const Hypergraph h = build_hypergraph(s);
    const FractionalTransversal t = fractional_transversal(h);
    const FractionalMatching m = fractional_matching(h);
    ASSERT_TRUE(is_fractional_transversal(h, t));
    ASSERT_TRUE(is_fractional_matching(h, m));
    EXPECT_EQ(t.weight, m.weight);
    const FractionalMatching v = fractional_matching(h, MatchingChoice::Vertex);
    EXPECT_EQ(v.weight, m.weight);
    // Merging parallel edges leaves tau* unchanged.
    EXPECT_EQ(fractional_transversal(h.dedup()).weight, t.weight);
    // Tableau rows lie in 1..L.
    const int rows = distinct_tableau_rows(s, m);
    EXPECT_GE(rows, 1);
    EXPECT_LE(rows, s.tuple_length());
  }
}

TEST(HypergraphTest, DedupKeepsFirstOccurrence) {
  const Hypergraph h = graph_of(2, {{0, 1}, {0}, {0, 1}});
  const Hypergraph d = h.dedup();
  ASSERT_EQ(d.edges.size(), 2u);
  EXPECT_EQ(d.edges[0].vertices, (Block{0, 1}));
  EXPECT_EQ(d.edges[1].vertices, (Block{0}));
}

}  // namespace
}  // namespace motif
