#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "motif/pointset.hpp"
#include "motif/rational.hpp"
#include "motif/spec.hpp"

namespace motif {

enum class SearchMode { Exhaustive, LocalSearch };

struct SearchResult {
  std::size_t r = 0;
  BigInt best_count;
  /// Every argmax subset in enumeration order (exhaustive) or the best set found (local).
  std::vector<PointSet> maximizers;
  SearchMode mode = SearchMode::Exhaustive;
  Rational tau_star;
  BigInt sets_examined;
};

/// The integer box {0..side-1}^p.
PointSet integer_box(std::size_t side, int p);

inline constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000;

/// Counts every r-subset of `universe` with the join engine and keeps all maximizers.
/// Throws Error{BudgetExceeded} when C(|universe|, r) > budget. `threads` splits the work
/// by first element; the result does not depend on it.
SearchResult exhaustive_maximizer(const MotifSpec& spec, const PointSet& universe, std::size_t r,
                                  std::uint64_t budget = kDefaultSubsetBudget, unsigned threads = 1);

struct GridCheck {
  bool is_grid = false;
  /// Projection of the set onto each coordinate group (points of the group's dimension).
  std::vector<std::vector<Point>> factors;
};

/// Whether `set` is the product of its projections onto the groups of identical partitions.
/// Throws Error{NotUniform}.
GridCheck is_grid(const MotifSpec& spec, const PointSet& set);

struct RelocationResult {
  PointSet set;
  BigInt initial_count;
  BigInt final_count;
  std::size_t iterations = 0;
  bool reached_fixpoint = false;
};

/// Hill climbing for single-starred specs: remove the point whose loss is smallest and put
/// it back in line with the assignment maximizing the product of the other L-1 line counts.
/// Moves are kept only when the count does not drop. Throws Error{NotSingleStarred}.
RelocationResult relocation_improve(const MotifSpec& spec, const PointSet& set, std::size_t max_iters);

/// Random r-subset of `universe` (seeded) improved by relocation_improve.
SearchResult local_search_maximizer(const MotifSpec& spec, const PointSet& universe, std::size_t r,
                                    std::uint64_t seed, std::size_t max_iters);

}  // namespace motif
