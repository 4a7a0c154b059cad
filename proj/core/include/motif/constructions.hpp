#pragma once

#include <cstddef>
#include <vector>

#include "motif/hypergraph.hpp"
#include "motif/pointset.hpp"
#include "motif/rational.hpp"
#include "motif/spec.hpp"

namespace motif {

struct GridConstruction {
  PointSet set;
  /// Guaranteed count is r^{exponent} with exponent = L/n; compare with eq_power/leq_power.
  Rational exponent;
};

/// Cartesian product of one factor per group of identical partitions. Factor i holds the
/// diagonal points (t, ..., t), t = 1..sizes[i], across the coordinates of group i.
/// Throws Error{NotUniform} unless the spec is uniform, Error{InvalidArgument} on a wrong
/// number of sizes or a zero size.
GridConstruction grid_set(const MotifSpec& spec, const std::vector<std::size_t>& sizes);

struct MatchingConstruction {
  PointSet set;
  FractionalMatching matching;
  /// Least common multiple of the denominators of the positive matching values.
  BigInt d;
  /// M^{d * nu*}.
  BigInt guarantee;
  int distinct_rows = 0;
  /// True when nu* = 0: the set is just the constant rows and the guarantee is 1.
  bool trivial = false;
};

/// Lets the variable of each edge e range over {1..M^{d f(e)}} and collects every row of the
/// coordinate matrix under every assignment. Postconditions M^d <= |S| <= L' M^d are checked.
MatchingConstruction matching_construction(const MotifSpec& spec, std::size_t M,
                                           MatchingChoice choice = MatchingChoice::Balanced);

struct LinesConstruction {
  PointSet set;
  std::size_t n = 0;  // floor(r / L)
  /// prod_i (alpha_i N)^{alpha_i} = C (L N)^L.
  BigInt guarantee;
};

/// For each star column C_i, alpha_i N points that are zero except coordinate C_i, which runs
/// over 1..alpha_i N; padded to exactly r points with (j, -1, ..., -1) for fresh j.
/// Throws Error{NotSingleStarred} or Error{RTooSmall} (r < L).
LinesConstruction single_starred_construction(const MotifSpec& spec, std::size_t r);

}  // namespace motif
