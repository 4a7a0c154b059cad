#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "motif/pointset.hpp"
#include "motif/spec.hpp"

namespace motif::testing {

/// Small alphabet so random points collide often in individual coordinates.
inline Rational small_value(std::mt19937_64& rng) {
  static const Rational alphabet[] = {Rational(0), Rational(1), Rational(2), Rational(1, 2), Rational(-1)};
  return alphabet[std::uniform_int_distribution<int>(0, 4)(rng)];
}

/// Random valid specification with L <= max_L, p <= max_p. Each coordinate partitions a
/// random subset of the rows; uncovered cells get constants from the small alphabet.
inline MotifSpec random_spec(std::mt19937_64& rng, int max_L = 4, int max_p = 4, double constant_rate = 0.2) {
  std::uniform_int_distribution<int> pick_L(1, max_L);
  std::uniform_int_distribution<int> pick_p(1, max_p);
  std::bernoulli_distribution uncovered(constant_rate);
  RawSpec raw;
  raw.L = pick_L(rng);
  raw.p = pick_p(rng);
  for (int m = 0; m < raw.p; ++m) {
    std::vector<std::int64_t> rows;
    for (int i = 1; i <= raw.L; ++i) {
      if (uncovered(rng)) {
        raw.constants.push_back({i, m + 1, small_value(rng)});
      } else {
        rows.push_back(i);
      }
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    std::vector<std::vector<std::int64_t>> blocks;
    for (std::int64_t row : rows) {
      // Join an existing block or start a new one.
      std::uniform_int_distribution<std::size_t> where(0, blocks.size());
      std::size_t b = where(rng);
      if (b == blocks.size()) {
        blocks.push_back({row});
      } else {
        blocks[b].push_back(row);
      }
    }
    raw.partitions.push_back(std::move(blocks));
  }
  return validate_spec(raw);
}

/// Up to r distinct random points of dimension p over the small alphabet.
inline PointSet random_point_set(std::mt19937_64& rng, int p, std::size_t r) {
  std::vector<Point> pts;
  for (std::size_t attempts = 0; pts.size() < r && attempts < 50 * r + 50; ++attempts) {
    Point pt(p);
    for (auto& x : pt) x = small_value(rng);
    if (std::find(pts.begin(), pts.end(), pt) == pts.end()) pts.push_back(std::move(pt));
  }
  return PointSet(p, std::move(pts));
}

inline Point pt(std::initializer_list<long> xs) {
  Point out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline PointSet set_of(int p, std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<Point> out;
  for (const auto& x : pts) out.push_back(pt(x));
  return PointSet(p, std::move(out));
}

/// The six axis points (t,0,0), (0,t,0), (0,0,t), t = 1, 2.
inline PointSet corner_six() {
  return set_of(3, {{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 2, 0}, {0, 0, 1}, {0, 0, 2}});
}

}  // namespace motif::testing
