#include "motif/spec.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "motif/error.hpp"

namespace motif {

std::optional<int> MotifSpec::block_of(int row, int col) const {
  int idx = block_index_.at(static_cast<std::size_t>(row) * p_ + col);
  if (idx < 0) return std::nullopt;
  return idx;
}

const std::optional<Rational>& MotifSpec::constant(int row, int col) const {
  return consts_.at(static_cast<std::size_t>(row) * p_ + col);
}

int MotifSpec::block_count() const noexcept {
  int total = 0;
  for (const auto& part : partitions_) total += static_cast<int>(part.size());
  return total;
}

MotifSpec validate_spec(const RawSpec& raw) {
  if (raw.L < 1 || raw.L > 64) {
    throw Error(ErrorCode::InvalidArgument, "L must be in 1..64, got " + std::to_string(raw.L));
  }
  if (raw.p < 1 || raw.p > 64) {
    throw Error(ErrorCode::InvalidArgument, "p must be in 1..64, got " + std::to_string(raw.p));
  }
  if (static_cast<std::int64_t>(raw.partitions.size()) != raw.p) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(raw.p) + " partitions, got " +
                                                std::to_string(raw.partitions.size()));
  }

  MotifSpec spec;
  spec.L_ = static_cast<int>(raw.L);
  spec.p_ = static_cast<int>(raw.p);
  const auto cells = static_cast<std::size_t>(spec.L_) * spec.p_;
  spec.block_index_.assign(cells, -1);
  spec.consts_.assign(cells, std::nullopt);

  for (int m = 0; m < spec.p_; ++m) {
    Partition part;
    std::vector<bool> seen(spec.L_, false);
    for (std::size_t b = 0; b < raw.partitions[m].size(); ++b) {
      const auto& raw_block = raw.partitions[m][b];
      const std::string where = "partitions[" + std::to_string(m) + "][" + std::to_string(b) + "]";
      if (raw_block.empty()) throw Error(ErrorCode::EmptyBlock, where + " is empty");
      Block block;
      for (std::int64_t x : raw_block) {
        if (x < 1 || x > raw.L) {
          throw Error(ErrorCode::BadIndex, where + " contains " + std::to_string(x) + " outside 1.." +
                                               std::to_string(raw.L));
        }
        int row = static_cast<int>(x - 1);
        if (seen[row]) {
          throw Error(ErrorCode::OverlappingBlocks,
                      where + ": row " + std::to_string(x) + " already in a block of coordinate " +
                          std::to_string(m + 1));
        }
        seen[row] = true;
        block.push_back(row);
      }
      std::sort(block.begin(), block.end());
      part.push_back(std::move(block));
    }
    std::sort(part.begin(), part.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    for (std::size_t b = 0; b < part.size(); ++b) {
      for (int row : part[b]) spec.block_index_[static_cast<std::size_t>(row) * spec.p_ + m] = static_cast<int>(b);
    }
    spec.partitions_.push_back(std::move(part));
  }

  for (const auto& c : raw.constants) {
    if (c.row < 1 || c.row > raw.L || c.col < 1 || c.col > raw.p) {
      throw Error(ErrorCode::BadIndex, "constant at (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                           ") is outside the " + std::to_string(raw.L) + "x" +
                                           std::to_string(raw.p) + " matrix");
    }
    const auto idx = static_cast<std::size_t>(c.row - 1) * spec.p_ + (c.col - 1);
    if (spec.block_index_[idx] >= 0) {
      throw Error(ErrorCode::ExtraConstant, "row " + std::to_string(c.row) + " is covered in coordinate " +
                                                std::to_string(c.col) + " and cannot carry a constant");
    }
    if (spec.consts_[idx]) {
      throw Error(ErrorCode::ExtraConstant,
                  "duplicate constant at (" + std::to_string(c.row) + "," + std::to_string(c.col) + ")");
    }
    spec.consts_[idx] = c.value;
    spec.has_constants_ = true;
  }

  for (int i = 0; i < spec.L_; ++i) {
    for (int m = 0; m < spec.p_; ++m) {
      const auto idx = static_cast<std::size_t>(i) * spec.p_ + m;
      if (spec.block_index_[idx] < 0 && !spec.consts_[idx]) {
        throw Error(ErrorCode::MissingConstant, "row " + std::to_string(i + 1) + " is in no block of coordinate " +
                                                    std::to_string(m + 1) + " and has no constant");
      }
    }
  }
  return spec;
}

RawSpec to_raw(const MotifSpec& spec) {
  RawSpec raw;
  raw.L = spec.tuple_length();
  raw.p = spec.dimension();
  for (const auto& part : spec.partitions()) {
    std::vector<std::vector<std::int64_t>> blocks;
    for (const auto& block : part) {
      std::vector<std::int64_t> rows;
      for (int r : block) rows.push_back(r + 1);
      blocks.push_back(std::move(rows));
    }
    raw.partitions.push_back(std::move(blocks));
  }
  for (int i = 0; i < spec.tuple_length(); ++i) {
    for (int m = 0; m < spec.dimension(); ++m) {
      if (const auto& c = spec.constant(i, m)) raw.constants.push_back({i + 1, m + 1, *c});
    }
  }
  return raw;
}

CoordinateMatrix build_matrix(const MotifSpec& spec) {
  const int L = spec.tuple_length();
  const int p = spec.dimension();
  std::vector<int> first_id(p, 0);
  std::vector<BlockInfo> blocks;
  for (int m = 0; m < p; ++m) {
    first_id[m] = static_cast<int>(blocks.size());
    for (const auto& block : spec.partition(m)) blocks.push_back({m, block});
  }
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(L) * p);
  for (int i = 0; i < L; ++i) {
    for (int m = 0; m < p; ++m) {
      if (auto b = spec.block_of(i, m)) {
        cells.emplace_back(BlockId{first_id[m] + *b});
      } else {
        cells.emplace_back(*spec.constant(i, m));
      }
    }
  }
  return CoordinateMatrix(L, p, std::move(cells), std::move(blocks));
}

SpecClass classify_spec(const MotifSpec& spec) {
  SpecClass cls;
  if (spec.has_constants()) return cls;

  const int L = spec.tuple_length();
  const int p = spec.dimension();

  std::optional<int> edge_size;
  bool same_size = true;
  for (const auto& part : spec.partitions()) {
    for (const auto& block : part) {
      if (!edge_size) edge_size = static_cast<int>(block.size());
      same_size = same_size && *edge_size == static_cast<int>(block.size());
    }
  }
  // Without constants every row is covered in every coordinate, so a common block size is enough.
  if (same_size && edge_size) {
    UniformInfo info;
    info.edge_size = *edge_size;
    std::vector<bool> placed(p, false);
    for (int m = 0; m < p; ++m) {
      if (placed[m]) continue;
      std::vector<int> group;
      for (int k = m; k < p; ++k) {
        if (!placed[k] && spec.partition(k) == spec.partition(m)) {
          placed[k] = true;
          group.push_back(k);
        }
      }
      info.permutation.insert(info.permutation.end(), group.begin(), group.end());
      info.groups.push_back(std::move(group));
    }
    cls.uniform = std::move(info);
  }

  bool starred = true;
  for (int i = 0; i < L && starred; ++i) {
    int singleton_columns = 0;
    for (int m = 0; m < p; ++m) {
      auto b = spec.block_of(i, m);
      if (b && spec.partition(m)[*b].size() == 1) ++singleton_columns;
    }
    starred = singleton_columns == 1;
  }
  cls.single_starred = starred;
  return cls;
}

std::string describe(const SpecClass& cls) {
  std::ostringstream out;
  bool first = true;
  if (cls.uniform) {
    out << "Uniform(n=" << cls.uniform->edge_size << ", q=" << cls.uniform->groups.size() << ", p_i=";
    for (std::size_t g = 0; g < cls.uniform->groups.size(); ++g) {
      out << (g ? "," : "") << cls.uniform->groups[g].size();
    }
    out << ")";
    first = false;
  }
  if (cls.single_starred) {
    out << (first ? "" : " + ") << "SingleStarred";
    first = false;
  }
  if (first) out << "General";
  return out.str();
}

namespace fixtures {

MotifSpec intro_spec() {
  RawSpec raw;
  raw.L = 4;
  raw.p = 3;
  raw.partitions = {{{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}, {{1, 2}, {3, 4}}};
  return validate_spec(raw);
}

MotifSpec corner_spec() {
  RawSpec raw;
  raw.L = 3;
  raw.p = 3;
  raw.partitions = {{{1, 2}, {3}}, {{1, 3}, {2}}, {{1}, {2, 3}}};
  return validate_spec(raw);
}

}  // namespace fixtures

}  // namespace motif
