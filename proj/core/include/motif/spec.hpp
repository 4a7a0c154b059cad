#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "motif/rational.hpp"

namespace motif {

/// Unvalidated specification as it appears in a spec file. Row and column indices are 1-based.
struct RawConstant {
  std::int64_t row = 0;
  std::int64_t col = 0;
  Rational value;
};

struct RawSpec {
  std::int64_t L = 0;
  std::int64_t p = 0;
  std::vector<std::vector<std::vector<std::int64_t>>> partitions;
  std::vector<RawConstant> constants;
};

/// Rows of one block, 0-based and sorted ascending.
using Block = std::vector<int>;
/// Blocks of one coordinate, sorted by their smallest row.
using Partition = std::vector<Block>;

/// A validated motif specification: per-coordinate partitions of subsets of the L tuple
/// positions, plus a constant for every (row, coordinate) pair left uncovered.
///
/// Internally everything is 0-based; file formats and reports use 1-based indices.
class MotifSpec {
 public:
  int tuple_length() const noexcept { return L_; }
  int dimension() const noexcept { return p_; }

  const std::vector<Partition>& partitions() const noexcept { return partitions_; }
  const Partition& partition(int col) const { return partitions_.at(col); }

  /// Index of the block of `partition(col)` containing `row`, if any.
  std::optional<int> block_of(int row, int col) const;
  /// The constant pinned at (row, col); empty when the row is covered in that column.
  const std::optional<Rational>& constant(int row, int col) const;

  bool has_constants() const noexcept { return has_constants_; }
  /// Total number of blocks across all partitions.
  int block_count() const noexcept;

  friend bool operator==(const MotifSpec&, const MotifSpec&) = default;

 private:
  friend MotifSpec validate_spec(const RawSpec& raw);

  int L_ = 0;
  int p_ = 0;
  std::vector<Partition> partitions_;
  std::vector<int> block_index_;                 // L*p, -1 when uncovered
  std::vector<std::optional<Rational>> consts_;  // L*p
  bool has_constants_ = false;
};

/// Validates and normalizes a raw specification.
/// Throws Error with OverlappingBlocks, EmptyBlock, BadIndex, MissingConstant or ExtraConstant.
MotifSpec validate_spec(const RawSpec& raw);

/// Converts back to the raw (1-based) form; validate_spec(to_raw(s)) == s.
RawSpec to_raw(const MotifSpec& spec);

struct BlockId {
  int value = 0;
  friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

/// One cell of the coordinate matrix: a shared variable (one per block) or a pinned constant.
using Cell = std::variant<BlockId, Rational>;

struct BlockInfo {
  int col = 0;
  Block rows;
};

/// The L x p matrix of variables and constants; row i is the coordinate pattern of the i-th point.
class CoordinateMatrix {
 public:
  CoordinateMatrix(int rows, int cols, std::vector<Cell> cells, std::vector<BlockInfo> blocks)
      : rows_(rows), cols_(cols), cells_(std::move(cells)), blocks_(std::move(blocks)) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const Cell& at(int row, int col) const { return cells_.at(static_cast<std::size_t>(row) * cols_ + col); }
  int variable_count() const noexcept { return static_cast<int>(blocks_.size()); }
  /// Column and rows of the block behind a variable.
  const BlockInfo& block(BlockId id) const { return blocks_.at(id.value); }

 private:
  int rows_;
  int cols_;
  std::vector<Cell> cells_;
  std::vector<BlockInfo> blocks_;
};

/// Block ids are assigned column by column, blocks in order of their smallest row.
CoordinateMatrix build_matrix(const MotifSpec& spec);

struct UniformInfo {
  int edge_size = 0;
  /// Coordinates grouped so that identical partitions share a group; groups ordered by
  /// their first coordinate.
  std::vector<std::vector<int>> groups;
  /// Concatenation of `groups`: the coordinate reordering that makes groups contiguous.
  std::vector<int> permutation;
};

/// All classes a specification satisfies. Uniform and single-starred can hold together
/// only when every block is a singleton.
struct SpecClass {
  std::optional<UniformInfo> uniform;
  bool single_starred = false;

  bool is_general() const noexcept { return !uniform && !single_starred; }
};

SpecClass classify_spec(const MotifSpec& spec);

/// Human readable summary such as "Uniform(n=2, q=3, p_i=1,1,1)".
std::string describe(const SpecClass& cls);

namespace fixtures {
/// The parallelepiped motif: four points at pairwise non-adjacent vertices of an axis-parallel box.
MotifSpec intro_spec();
/// L=3, p=3 single-starred corner motif: pi1={{1,2},{3}}, pi2={{1,3},{2}}, pi3={{1},{2,3}}.
MotifSpec corner_spec();
}  // namespace fixtures

}  // namespace motif
