#include "motif/pointset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "motif/error.hpp"

namespace motif {

PointSet::PointSet(int dimension, std::vector<Point> points) : dim_(dimension), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "point " + to_string(p) + " does not have dimension " +
                                                    std::to_string(dim_));
    }
  }
  std::sort(points_.begin(), points_.end());
  if (auto dup = std::adjacent_find(points_.begin(), points_.end()); dup != points_.end()) {
    throw Error(ErrorCode::DuplicatePoint, "point " + to_string(*dup) + " appears twice");
  }
}

bool PointSet::contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

PointSet PointSet::with(const Point& p) const {
  if (static_cast<int>(p.size()) != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "point " + to_string(p) + " has the wrong dimension");
  }
  PointSet out = *this;
  auto it = std::lower_bound(out.points_.begin(), out.points_.end(), p);
  if (it == out.points_.end() || *it != p) out.points_.insert(it, p);
  return out;
}

PointSet PointSet::without(const Point& p) const {
  PointSet out = *this;
  auto it = std::lower_bound(out.points_.begin(), out.points_.end(), p);
  if (it != out.points_.end() && *it == p) out.points_.erase(it);
  return out;
}

bool matches(const Point& point, const Pattern& pattern) {
  if (point.size() != pattern.size()) return false;
  for (std::size_t m = 0; m < point.size(); ++m) {
    if (pattern[m] && *pattern[m] != point[m]) return false;
  }
  return true;
}

std::size_t line_count(const PointSet& set, const Pattern& pattern) {
  if (static_cast<int>(pattern.size()) != set.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "pattern length differs from point-set dimension");
  }
  return static_cast<std::size_t>(
      std::count_if(set.begin(), set.end(), [&](const Point& p) { return matches(p, pattern); }));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

PointSet parse_point_set(std::string_view text) {
  std::optional<int> dim;
  std::vector<std::pair<Point, int>> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (!dim) {
      if (line.substr(0, 2) != "p=") throw Error(ErrorCode::Parse, where + ": expected header 'p=<int>'");
      Rational p;
      try {
        p = parse_rational(line.substr(2));
      } catch (const Error&) {
        throw Error(ErrorCode::Parse, where + ": bad dimension '" + std::string(line.substr(2)) + "'");
      }
      if (p.get_den() != 1 || p < 1 || p > 64 || line.substr(2).find('/') != std::string_view::npos) {
        throw Error(ErrorCode::Parse, where + ": dimension must be an integer in 1..64");
      }
      dim = static_cast<int>(p.get_num().get_si());
      continue;
    }
    Point point;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string_view field = trim(line.substr(start, comma == std::string_view::npos ? line.size() - start : comma - start));
      try {
        point.push_back(parse_rational(field));
      } catch (const Error& e) {
        throw Error(ErrorCode::Parse, where + ": " + e.detail());
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(point.size()) != *dim) {
      throw Error(ErrorCode::DimensionMismatch, where + ": expected " + std::to_string(*dim) + " coordinates, got " +
                                                    std::to_string(point.size()));
    }
    rows.emplace_back(std::move(point), line_no);
  }
  if (!dim) throw Error(ErrorCode::Parse, "missing header 'p=<int>'");

  std::vector<std::pair<Point, int>> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      throw Error(ErrorCode::DuplicatePoint, "line " + std::to_string(sorted[i].second) + ": point " +
                                                 to_string(sorted[i].first) + " duplicates line " +
                                                 std::to_string(sorted[i - 1].second));
    }
  }
  std::vector<Point> points;
  points.reserve(rows.size());
  for (auto& r : rows) points.push_back(std::move(r.first));
  return PointSet(*dim, std::move(points));
}

PointSet load_point_set_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read point-set file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_point_set(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

std::string serialize_point_set(const PointSet& set) {
  std::string out = "p=" + std::to_string(set.dimension()) + "\n";
  for (const auto& p : set) {
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (m) out += ',';
      out += to_string(p[m]);
    }
    out += '\n';
  }
  return out;
}

void save_point_set_file(const std::filesystem::path& path, const PointSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << serialize_point_set(set);
}

std::string to_string(const Point& point) {
  std::string out = "(";
  for (std::size_t m = 0; m < point.size(); ++m) {
    if (m) out += ',';
    out += to_string(point[m]);
  }
  return out + ")";
}

std::string to_string(const Pattern& pattern) {
  std::string out = "(";
  for (std::size_t m = 0; m < pattern.size(); ++m) {
    if (m) out += ',';
    out += pattern[m] ? to_string(*pattern[m]) : "*";
  }
  return out + ")";
}

}  // namespace motif
