#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "motif/counting.hpp"
#include "motif/hypergraph.hpp"
#include "motif/search.hpp"
#include "motif/spec_io.hpp"
#include "support/generators.hpp"

namespace motif {
namespace {

using testing::set_of;

TEST(CountingTest, IntroOnUnitCube) {
  const PointSet cube = integer_box(2, 3);
  EXPECT_EQ(count_motifs_naive(fixtures::intro_spec(), cube), 64);
  EXPECT_EQ(count_motifs_join(fixtures::intro_spec(), cube), 64);
}

TEST(CountingTest, IntroOnBox) {
  std::vector<Point> pts;
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 3; ++y)
      for (long z = 0; z < 4; ++z) pts.push_back(testing::pt({x, y, z}));
  const PointSet box(3, pts);
  EXPECT_EQ(count_motifs_join(fixtures::intro_spec(), box), 576);
  EXPECT_EQ(count_motifs_naive(fixtures::intro_spec(), box), 576);
}

TEST(CountingTest, CornerOnAxisPoints) {
  EXPECT_EQ(count_motifs_naive(fixtures::corner_spec(), testing::corner_six()), 20);
  EXPECT_EQ(count_motifs_join(fixtures::corner_spec(), testing::corner_six()), 20);
}

TEST(CountingTest, EmptySetAndTrivialSpec) {
  EXPECT_EQ(count_motifs_join(fixtures::intro_spec(), PointSet(3)), 0);
  EXPECT_EQ(count_motifs_naive(fixtures::intro_spec(), PointSet(3)), 0);
  const MotifSpec one = validate_spec({1, 2, {{{1}}, {{1}}}, {}});
  const PointSet s = set_of(2, {{0, 0}, {1, 5}, {2, 2}});
  EXPECT_EQ(count_motifs_join(one, s), 3);
  EXPECT_EQ(count_motifs_naive(one, s), 3);
}

TEST(CountingTest, ConstantsFilterPoints) {
  // Row 2 pinned to x = 5; y shared by both rows.
  const MotifSpec s = validate_spec({2, 2, {{{1}}, {{1, 2}}}, {{2, 1, Rational(5)}}});
  const PointSet pts = set_of(2, {{0, 0}, {5, 0}, {1, 1}, {2, 0}});
  // Pairs (a, b) with b = (5, 0) and a.y == 0: a in {(0,0),(5,0),(2,0)}.
  EXPECT_EQ(count_motifs_naive(s, pts), 3);
  EXPECT_EQ(count_motifs_join(s, pts), 3);
  EXPECT_EQ(count_motifs_join(s, set_of(2, {{0, 0}, {1, 1}})), 0);
}

TEST(CountingTest, UncoveredSpecCountsRToTheL) {
  // Each partition is over a single row, so points on different rows are unrelated.
  const MotifSpec s = validate_spec({3, 1, {{{1}, {2}, {3}}}, {}});
  const PointSet pts = set_of(1, {{1}, {2}, {3}, {4}});
  EXPECT_EQ(count_motifs_join(s, pts), 64);
}

TEST(CountingTest, JoinMatchesNaiveOnRandomCorpus) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const MotifSpec s = testing::random_spec(rng, 4, 4, 0.2);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, 10)(rng);
    const PointSet set = testing::random_point_set(rng, s.dimension(), r);
    const BigInt naive = count_motifs_naive(s, set);
    ASSERT_EQ(count_motifs_join(s, set), naive) << serialize_spec(s);
    ASSERT_EQ(count_motifs_join(s, set, 3), naive);
    EXPECT_TRUE(verify_upper_bound(s, set).holds);
  }
}

TEST(CountingTest, MonotoneUnderInsertion) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const MotifSpec s = testing::random_spec(rng, 4, 3, 0.1);
    const PointSet set = testing::random_point_set(rng, s.dimension(), 6);
    const PointSet extra = testing::random_point_set(rng, s.dimension(), 1);
    if (extra.empty()) continue;
    EXPECT_LE(count_motifs_join(s, set), count_motifs_join(s, set.with(extra[0])));
  }
}

TEST(CountingTest, InvariantUnderCoordinateMaps) {
  // Applying the same injective map to a coordinate of every point keeps the count,
  // as long as the spec has no constants to move with it.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const MotifSpec s = testing::random_spec(rng, 4, 3, 0.0);
    const PointSet set = testing::random_point_set(rng, s.dimension(), 8);
    std::vector<Point> mapped;
    for (Point p : set) {
      p[0] = p[0] * 3 + 7;
      mapped.push_back(std::move(p));
    }
    EXPECT_EQ(count_motifs_join(s, PointSet(s.dimension(), mapped)), count_motifs_join(s, set));
  }
}

TEST(CountingTest, ThreadCountDoesNotMatter) {
  const PointSet box = integer_box(3, 3);
  const BigInt one = count_motifs_join(fixtures::intro_spec(), box, 1);
  EXPECT_EQ(one, 729);
  for (unsigned t : {2u, 4u, 16u, 64u}) EXPECT_EQ(count_motifs_join(fixtures::intro_spec(), box, t), one);
}

TEST(BoundCheckTest, ExactPowerComparison) {
  const BoundCheck tight = check_upper_bound(64, 8, Rational(2));
  EXPECT_TRUE(tight.holds);
  EXPECT_TRUE(tight.tight);
  const BoundCheck loose = check_upper_bound(20, 6, Rational(3));
  EXPECT_TRUE(loose.holds);
  EXPECT_FALSE(loose.tight);
  EXPECT_FALSE(check_upper_bound(65, 8, Rational(2)).holds);
  // tau* = 3/2: count^2 <= r^3.
  const BoundCheck half = check_upper_bound(8, 4, Rational(3, 2));
  EXPECT_EQ(half.lhs, 64);
  EXPECT_EQ(half.rhs, 64);
  EXPECT_TRUE(half.tight);
  EXPECT_TRUE(check_upper_bound(0, 0, Rational(2)).holds);
}

TEST(BoundCheckTest, VerifyUsesTauStar) {
  const BoundCheck b = verify_upper_bound(fixtures::corner_spec(), testing::corner_six());
  EXPECT_EQ(b.count, 20);
  EXPECT_EQ(b.tau_star, Rational(3));
  EXPECT_EQ(b.rhs, 216);
  EXPECT_TRUE(b.holds);
}

}  // namespace
}  // namespace motif
