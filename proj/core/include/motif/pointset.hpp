#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motif/rational.hpp"

namespace motif {

using Point = std::vector<Rational>;

/// A finite set of distinct points of fixed dimension, kept in lexicographic order.
class PointSet {
 public:
  explicit PointSet(int dimension) : dim_(dimension) {}
  /// Throws Error{DimensionMismatch} on a wrong-length point and Error{DuplicatePoint} on repeats.
  PointSet(int dimension, std::vector<Point> points);

  int dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const Point& p) const;
  /// Copy with `p` added; returns an unchanged copy if already present.
  PointSet with(const Point& p) const;
  /// Copy with `p` removed.
  PointSet without(const Point& p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dim_;
  std::vector<Point> points_;
};

/// Pattern entry: a fixed coordinate, or std::nullopt for a star (any value).
using Pattern = std::vector<std::optional<Rational>>;

bool matches(const Point& point, const Pattern& pattern);

/// Number of points agreeing with `pattern` on all non-star entries.
std::size_t line_count(const PointSet& set, const Pattern& pattern);

/// Point-set files: a header line "p=<int>", then one point per line with coordinates as
/// rational literals separated by commas. Blank lines are ignored. Duplicate points are an
/// error reported with their line number.
PointSet parse_point_set(std::string_view text);
PointSet load_point_set_file(const std::filesystem::path& path);
std::string serialize_point_set(const PointSet& set);
void save_point_set_file(const std::filesystem::path& path, const PointSet& set);

std::string to_string(const Point& point);
std::string to_string(const Pattern& pattern);

}  // namespace motif
