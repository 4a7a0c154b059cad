#include <gtest/gtest.h>

#include "motif/constructions.hpp"
#include "motif/counting.hpp"
#include "motif/error.hpp"
#include "motif/spec_io.hpp"
#include "support/generators.hpp"

namespace motif {
namespace {

TEST(GridConstructionTest, IntroGrids) {
  const MotifSpec s = fixtures::intro_spec();
  const GridConstruction g = grid_set(s, {2, 3, 4});
  EXPECT_EQ(g.set.size(), 24u);
  EXPECT_EQ(g.exponent, Rational(2));
  EXPECT_EQ(count_motifs_join(s, g.set), 576);
  EXPECT_TRUE(eq_power(count_motifs_join(s, g.set), g.set.size(), g.exponent));
}

TEST(GridConstructionTest, GroupedCoordinatesUseDiagonal) {
  // pi1 = pi3, so coordinates 1 and 3 form one group of diagonal points.
  const MotifSpec s = validate_spec({4, 3, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 2}, {3, 4}}}, {}});
  const GridConstruction g = grid_set(s, {3, 2});
  EXPECT_EQ(g.set.size(), 6u);
  for (const Point& p : g.set) EXPECT_EQ(p[0], p[2]);
  EXPECT_TRUE(eq_power(count_motifs_join(s, g.set), g.set.size(), g.exponent));
}

TEST(GridConstructionTest, Errors) {
  EXPECT_THROW(grid_set(fixtures::corner_spec(), {2, 2, 2}), Error);
  EXPECT_THROW(grid_set(fixtures::intro_spec(), {2, 2}), Error);
  EXPECT_THROW(grid_set(fixtures::intro_spec(), {2, 0, 2}), Error);
}

TEST(MatchingConstructionTest, IntroReachesGridCounts) {
  const MotifSpec s = fixtures::intro_spec();
  for (std::size_t M : {2u, 3u}) {
    const MatchingConstruction m = matching_construction(s, M);
    EXPECT_EQ(m.d, 3);
    EXPECT_EQ(m.distinct_rows, 1);
    EXPECT_EQ(m.set.size(), M * M * M);
    EXPECT_EQ(m.guarantee, pow(BigInt(M), 6));
    EXPECT_EQ(count_motifs_join(s, m.set), m.guarantee);
  }
}

TEST(MatchingConstructionTest, CornerMeetsGuarantee) {
  const MotifSpec s = fixtures::corner_spec();
  const MatchingConstruction m = matching_construction(s, 2);
  EXPECT_EQ(m.d, 1);
  EXPECT_EQ(m.guarantee, 8);
  EXPECT_EQ(m.distinct_rows, 3);
  EXPECT_GE(count_motifs_join(s, m.set), m.guarantee);
}

TEST(MatchingConstructionTest, SandwichOnRandomSpecs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const MotifSpec s = testing::random_spec(rng, 3, 3, 0.15);
    const MatchingConstruction m = matching_construction(s, 2);
    if (m.trivial) continue;
    const BigInt Md = pow(BigInt(2), to_u64(m.d));
    EXPECT_LE(Md, m.set.size());
    EXPECT_LE(BigInt(m.set.size()), Md * m.distinct_rows);
    if (m.set.size() <= 40) EXPECT_GE(count_motifs_join(s, m.set), m.guarantee) << serialize_spec(s);
  }
}

TEST(LinesConstructionTest, CornerSixPoints) {
  const MotifSpec s = fixtures::corner_spec();
  const LinesConstruction c = single_starred_construction(s, 6);
  EXPECT_EQ(c.n, 2u);
  EXPECT_EQ(c.set, testing::corner_six());
  EXPECT_EQ(c.guarantee, 8);
  EXPECT_EQ(count_motifs_join(s, c.set), 20);
}

TEST(LinesConstructionTest, PadsToExactSize) {
  const MotifSpec s = fixtures::corner_spec();
  for (std::size_t r = 3; r <= 14; ++r) {
    const LinesConstruction c = single_starred_construction(s, r);
    EXPECT_EQ(c.set.size(), r);
    EXPECT_GE(count_motifs_join(s, c.set), c.guarantee);
  }
}

TEST(LinesConstructionTest, TwoStarsInOneColumn) {
  // L=2, p=2: both stars in column 1, shared variable in column 2. Count = r^2 on a line.
  const MotifSpec s = validate_spec({2, 2, {{{1}, {2}}, {{1, 2}}}, {}});
  const LinesConstruction c = single_starred_construction(s, 10);
  EXPECT_EQ(c.guarantee, 100);
  EXPECT_EQ(count_motifs_join(s, c.set), 100);
}

TEST(LinesConstructionTest, Errors) {
  EXPECT_THROW(single_starred_construction(fixtures::corner_spec(), 2), Error);
  EXPECT_THROW(single_starred_construction(fixtures::intro_spec(), 8), Error);
}

}  // namespace
}  // namespace motif
