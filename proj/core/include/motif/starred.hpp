#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "motif/pointset.hpp"
#include "motif/rational.hpp"
#include "motif/spec.hpp"

namespace motif {

/// Tableau of a single-starred specification: each size-1 block becomes a star, every other
/// block a variable numbered 0..k-1 in block-id order.
struct StarProfile {
  int L = 0;
  int p = 0;
  /// Star columns C_1 < ... < C_q (0-based) and how many stars each holds.
  std::vector<int> star_columns;
  std::vector<int> multiplicities;
  /// sigma[row] = index into star_columns of that row's star.
  std::vector<int> sigma;
  /// cells[row][col] = variable index, or -1 for the star.
  std::vector<std::vector<int>> cells;
  /// Number of non-star variables.
  int k = 0;
  /// prod alpha_i^alpha_i / L^L.
  Rational constant;
};

/// Throws Error{NotSingleStarred}.
StarProfile star_profile(const MotifSpec& spec);

struct Thresholds {
  BigInt m1;  // L (L^L + 1)
  BigInt m;   // (2 m1)^{L-1} L^2 + 1
};

Thresholds thresholds(int L);

/// Values of the k non-star variables.
using Assignment = std::vector<Rational>;

/// Row pattern f_row(v): the star stays a star, variables take their values.
Pattern row_pattern(const StarProfile& profile, const Assignment& v, int row);

struct CenterPoint {
  Assignment v;
  std::vector<std::size_t> line_counts;
  bool is_center = false;
  bool is_hypercenter = false;
};

/// Evaluates line counts and both flags for one assignment.
CenterPoint evaluate_center(const StarProfile& profile, const Thresholds& th, const PointSet& set,
                            const Assignment& v);

/// Every assignment obtained by placing a point of `set` on each row except `omitted_row`
/// (pass -1 to use all rows) consistently with shared variables.
std::set<Assignment> anchored_assignments(const StarProfile& profile, const PointSet& set, int omitted_row);

/// All centers of `set`, sorted by assignment. Candidates are anchored on L-1 rows, which is
/// complete because a qualifying line count is positive. Throws Error{InvariantViolation} if
/// more than L M(L)^{L-1} centers turn up.
std::vector<CenterPoint> enumerate_centers(const MotifSpec& spec, const PointSet& set);

/// True when w matches f_i(v) off the star for some row i.
bool in_line(const Point& w, const Assignment& v, const StarProfile& profile);
bool in_line(const Point& w, const Assignment& v, const MotifSpec& spec);

struct StructureReport {
  std::size_t r = 0;
  std::vector<CenterPoint> centers;
  std::size_t n_hypercenters = 0;
  BigInt center_bound;  // L M(L)^{L-1}
  bool unique_center = false;
  bool has_hypercenter = false;
  bool unique_hypercenter = false;
  /// Every point is in line with at least one center.
  bool all_points_in_line = false;
  /// The hypercenter with the largest product of line counts (smallest assignment on ties).
  std::optional<CenterPoint> designated;
  /// Distinct row patterns of the designated center when they are exactly q lines, one per
  /// star column, covering every point; empty otherwise with `lines_failure` set.
  std::vector<Pattern> lines;
  std::vector<std::size_t> line_sizes;
  std::string lines_failure;
  /// Unique center, which is a hypercenter, all points in line, q lines.
  bool full_structure = false;
};

/// Measures each structural property of optimal single-starred sets on `set`.
StructureReport structure_report(const MotifSpec& spec, const PointSet& set);

}  // namespace motif
