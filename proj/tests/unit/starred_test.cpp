#include <gtest/gtest.h>

#include <random>

#include "motif/constructions.hpp"
#include "motif/counting.hpp"
#include "motif/error.hpp"
#include "motif/search.hpp"
#include "motif/starred.hpp"
#include "support/generators.hpp"

namespace motif {
namespace {

using testing::pt;
using testing::set_of;

MotifSpec two_star_spec() { return validate_spec({2, 2, {{{1}, {2}}, {{1, 2}}}, {}}); }

TEST(StarProfileTest, Corner) {
  const StarProfile p = star_profile(fixtures::corner_spec());
  EXPECT_EQ(p.star_columns, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(p.multiplicities, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(p.sigma, (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(p.k, 3);
  EXPECT_EQ(p.constant, Rational(1, 27));
  EXPECT_EQ(p.cells[0][2], -1);
  EXPECT_EQ(p.cells[1][1], -1);
  EXPECT_EQ(p.cells[2][0], -1);
}

TEST(StarProfileTest, SharedStarColumn) {
  const StarProfile p = star_profile(two_star_spec());
  EXPECT_EQ(p.star_columns, (std::vector<int>{0}));
  EXPECT_EQ(p.multiplicities, (std::vector<int>{2}));
  EXPECT_EQ(p.k, 1);
  EXPECT_EQ(p.constant, Rational(1));
}

TEST(StarProfileTest, RejectsOtherSpecs) {
  EXPECT_THROW(star_profile(fixtures::intro_spec()), Error);
}

TEST(ThresholdsTest, SmallL) {
  EXPECT_EQ(thresholds(1).m1, 2);
  EXPECT_EQ(thresholds(1).m, 2);
  EXPECT_EQ(thresholds(2).m1, 10);
  EXPECT_EQ(thresholds(2).m, 81);
  EXPECT_EQ(thresholds(3).m1, 84);
  EXPECT_EQ(thresholds(3).m, 254017);
}

TEST(CentersTest, OriginOfAxisPoints) {
  const MotifSpec s = fixtures::corner_spec();
  const StarProfile prof = star_profile(s);
  const CenterPoint c = evaluate_center(prof, thresholds(3), testing::corner_six(), {0, 0, 0});
  EXPECT_EQ(c.line_counts, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_TRUE(c.is_center);
  EXPECT_TRUE(c.is_hypercenter);
  const auto centers = enumerate_centers(s, testing::corner_six());
  EXPECT_TRUE(std::any_of(centers.begin(), centers.end(), [](const CenterPoint& x) {
    return x.v == Assignment{0, 0, 0};
  }));
  for (const auto& x : centers) {
    EXPECT_TRUE(x.is_center);
    EXPECT_EQ(x.line_counts, evaluate_center(prof, thresholds(3), testing::corner_six(), x.v).line_counts);
  }
}

TEST(CentersTest, SinglePointAndEmptySet) {
  const MotifSpec s = fixtures::corner_spec();
  const auto one = enumerate_centers(s, set_of(3, {{4, 5, 6}}));
  EXPECT_FALSE(one.empty());
  bool found = false;
  for (const auto& c : one) found |= c.is_hypercenter;
  EXPECT_TRUE(found);
  EXPECT_TRUE(enumerate_centers(s, PointSet(3)).empty());
}

TEST(CentersTest, RowPattern) {
  const StarProfile prof = star_profile(fixtures::corner_spec());
  const Assignment v{1, 2, 3};
  EXPECT_EQ(to_string(row_pattern(prof, v, 0)), "(1,2,*)");
  EXPECT_EQ(to_string(row_pattern(prof, v, 1)), "(1,*,3)");
  EXPECT_EQ(to_string(row_pattern(prof, v, 2)), "(*,2,3)");
}

TEST(InLineTest, Examples) {
  const MotifSpec s = fixtures::corner_spec();
  const Assignment origin{0, 0, 0};
  EXPECT_TRUE(in_line(pt({5, 0, 0}), origin, s));
  EXPECT_TRUE(in_line(pt({0, 0, 0}), origin, s));
  EXPECT_FALSE(in_line(pt({1, 1, 0}), origin, s));
  EXPECT_TRUE(in_line(pt({1, 2, 9}), Assignment{1, 2, 3}, s));
}

TEST(StructureTest, LinesConstructionHasFullLines) {
  const MotifSpec s = fixtures::corner_spec();
  const StructureReport rep = structure_report(s, testing::corner_six());
  EXPECT_EQ(rep.r, 6u);
  EXPECT_TRUE(rep.has_hypercenter);
  EXPECT_TRUE(rep.all_points_in_line);
  ASSERT_TRUE(rep.designated.has_value());
  EXPECT_EQ(rep.designated->v, (Assignment{0, 0, 0}));
  ASSERT_EQ(rep.lines.size(), 3u);
  EXPECT_EQ(to_string(rep.lines[0]), "(*,0,0)");
  EXPECT_EQ(rep.line_sizes, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_LE(BigInt(rep.centers.size()), rep.center_bound);
}

TEST(StructureTest, TwoFarPoints) {
  const StructureReport rep = structure_report(fixtures::corner_spec(), set_of(3, {{0, 0, 0}, {9, 9, 9}}));
  EXPECT_TRUE(rep.has_hypercenter);
  EXPECT_FALSE(rep.unique_center);
  EXPECT_TRUE(rep.all_points_in_line);
  EXPECT_FALSE(rep.full_structure);
}

TEST(StructureTest, HypercentersAreCentersOnRandomSets) {
  std::mt19937_64 rng(8);
  const MotifSpec s = fixtures::corner_spec();
  for (int trial = 0; trial < 40; ++trial) {
    const PointSet set = testing::random_point_set(rng, 3, 8);
    const StructureReport rep = structure_report(s, set);
    for (const auto& c : rep.centers) {
      if (c.is_hypercenter) EXPECT_TRUE(c.is_center);
    }
    EXPECT_LE(BigInt(rep.centers.size()), rep.center_bound);
  }
}

TEST(RelocationTest, NeverDecreases) {
  const MotifSpec s = fixtures::corner_spec();
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    const PointSet set = testing::random_point_set(rng, 3, 7);
    const RelocationResult res = relocation_improve(s, set, 20);
    EXPECT_EQ(res.initial_count, count_motifs_join(s, set));
    EXPECT_EQ(res.final_count, count_motifs_join(s, res.set));
    EXPECT_GE(res.final_count, res.initial_count);
    EXPECT_EQ(res.set.size(), set.size());
  }
}

TEST(RelocationTest, ImprovesScatteredSet) {
  // Six points pairwise far apart: only the diagonal tuples (w, w, w) are motifs.
  const MotifSpec s = fixtures::corner_spec();
  const PointSet set = set_of(3, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}, {13, 14, 15}, {16, 17, 18}});
  const RelocationResult res = relocation_improve(s, set, 50);
  EXPECT_EQ(res.initial_count, 6);
  EXPECT_GT(res.final_count, res.initial_count);
}

TEST(RelocationTest, RejectsNonStarred) {
  EXPECT_THROW(relocation_improve(fixtures::intro_spec(), integer_box(2, 3), 5), Error);
}

}  // namespace
}  // namespace motif
