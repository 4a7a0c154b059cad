#include "motif/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <thread>
#include <unordered_map>

#include "motif/error.hpp"
#include "motif/hypergraph.hpp"

namespace motif {

namespace {

void check_dimension(const MotifSpec& spec, const PointSet& set) {
  if (spec.dimension() != set.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "specification has p=" + std::to_string(spec.dimension()) +
                                                  " but the point set has dimension " +
                                                  std::to_string(set.dimension()));
  }
}

bool is_motif(const MotifSpec& spec, const std::vector<const Point*>& tuple) {
  for (int m = 0; m < spec.dimension(); ++m) {
    for (const auto& block : spec.partition(m)) {
      const Rational& first = (*tuple[block.front()])[m];
      for (int row : block) {
        if ((*tuple[row])[m] != first) return false;
      }
    }
    for (int i = 0; i < spec.tuple_length(); ++i) {
      const auto& c = spec.constant(i, m);
      if (c && (*tuple[i])[m] != *c) return false;
    }
  }
  return true;
}

// Adds into a 64-bit accumulator and spills into a BigInt on overflow.
class Tally {
 public:
  void add(std::uint64_t n) {
    if (__builtin_add_overflow(small_, n, &small_)) {
      big_ += BigInt(std::to_string(small_ - n));
      small_ = n;
    }
  }
  BigInt total() const { return big_ + BigInt(std::to_string(small_)); }

 private:
  std::uint64_t small_ = 0;
  BigInt big_ = 0;
};

struct KeyHash {
  std::size_t operator()(const std::vector<int>& key) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : key) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Step {
  int row = 0;
  std::vector<int> key_cols;             // columns fixed by constants or earlier bindings
  std::vector<int> key_var;              // variable behind each key column, -1 for a constant
  std::vector<int> key_const;            // interned constant for constant key columns
  std::vector<std::pair<int, int>> binds;  // (column, variable) bound by this step
  std::unordered_map<std::vector<int>, std::vector<int>, KeyHash> index;
};

class JoinCounter {
 public:
  JoinCounter(const MotifSpec& spec, const PointSet& set) {
    const int p = spec.dimension();
    const int L = spec.tuple_length();

    // Intern coordinates column by column; only equality matters.
    std::vector<std::map<Rational, int>> ids(p);
    for (const auto& pt : set) {
      for (int m = 0; m < p; ++m) ids[m].emplace(pt[m], 0);
    }
    for (auto& col : ids) {
      int next = 0;
      for (auto& [_, id] : col) id = next++;
    }
    points_.reserve(set.size());
    for (const auto& pt : set) {
      std::vector<int> row(p);
      for (int m = 0; m < p; ++m) row[m] = ids[m].at(pt[m]);
      points_.push_back(std::move(row));
    }

    const CoordinateMatrix matrix = build_matrix(spec);
    std::vector<bool> bound(matrix.variable_count(), false);
    std::vector<bool> used(L, false);
    for (int s = 0; s < L; ++s) {
      // Greedy: the row with the most bound cells next, ties by row index.
      int best_row = -1;
      int best_bound = -1;
      for (int i = 0; i < L; ++i) {
        if (used[i]) continue;
        int n_bound = 0;
        for (int m = 0; m < p; ++m) {
          const Cell& cell = matrix.at(i, m);
          const auto* id = std::get_if<BlockId>(&cell);
          if (!id || bound[id->value]) ++n_bound;
        }
        if (n_bound > best_bound) {
          best_bound = n_bound;
          best_row = i;
        }
      }
      used[best_row] = true;
      Step step;
      step.row = best_row;
      for (int m = 0; m < p; ++m) {
        const Cell& cell = matrix.at(best_row, m);
        if (const auto* id = std::get_if<BlockId>(&cell)) {
          if (bound[id->value]) {
            step.key_cols.push_back(m);
            step.key_var.push_back(id->value);
            step.key_const.push_back(-1);
          } else {
            step.binds.emplace_back(m, id->value);
          }
        } else {
          auto it = ids[m].find(std::get<Rational>(cell));
          if (it == ids[m].end()) {
            impossible_ = true;  // a constant no point carries
            return;
          }
          step.key_cols.push_back(m);
          step.key_var.push_back(-1);
          step.key_const.push_back(it->second);
        }
      }
      for (const auto& [m, var] : step.binds) bound[var] = true;
      for (int k = 0; k < static_cast<int>(points_.size()); ++k) {
        std::vector<int> key;
        key.reserve(step.key_cols.size());
        for (int m : step.key_cols) key.push_back(points_[k][m]);
        step.index[std::move(key)].push_back(k);
      }
      steps_.push_back(std::move(step));
    }
    n_vars_ = matrix.variable_count();
  }

  BigInt count(unsigned threads) const {
    if (impossible_ || points_.empty()) return 0;
    const std::vector<int>* first = bucket(0, std::vector<int>(n_vars_, -1));
    if (!first) return 0;
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(first->size())));
    std::vector<Tally> tallies(workers);
    auto work = [&](unsigned w) {
      std::vector<int> assignment(n_vars_, -1);
      for (std::size_t c = w; c < first->size(); c += workers) {
        descend(0, (*first)[c], assignment, tallies[w]);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    BigInt total = 0;
    for (const auto& t : tallies) total += t.total();
    return total;
  }

 private:
  const std::vector<int>* bucket(std::size_t s, const std::vector<int>& assignment) const {
    const Step& step = steps_[s];
    std::vector<int> key(step.key_cols.size());
    for (std::size_t k = 0; k < key.size(); ++k) {
      key[k] = step.key_var[k] >= 0 ? assignment[step.key_var[k]] : step.key_const[k];
    }
    auto it = step.index.find(key);
    return it == step.index.end() ? nullptr : &it->second;
  }

  // Places point `k` on step `s` and counts all completions.
  void descend(std::size_t s, int k, std::vector<int>& assignment, Tally& tally) const {
    const Step& step = steps_[s];
    for (const auto& [m, var] : step.binds) assignment[var] = points_[k][m];
    if (s + 1 == steps_.size()) {
      tally.add(1);
    } else if (const std::vector<int>* next = bucket(s + 1, assignment)) {
      if (s + 2 == steps_.size()) {
        tally.add(next->size());
      } else {
        for (int k2 : *next) descend(s + 1, k2, assignment, tally);
      }
    }
    for (const auto& [m, var] : step.binds) assignment[var] = -1;
  }

  std::vector<std::vector<int>> points_;
  std::vector<Step> steps_;
  int n_vars_ = 0;
  bool impossible_ = false;
};

}  // namespace

BigInt count_motifs_naive(const MotifSpec& spec, const PointSet& set) {
  check_dimension(spec, set);
  const int L = spec.tuple_length();
  const std::size_t r = set.size();
  if (r == 0) return 0;
  std::vector<std::size_t> odometer(L, 0);
  std::vector<const Point*> tuple(L, &set[0]);
  Tally tally;
  while (true) {
    if (is_motif(spec, tuple)) tally.add(1);
    int pos = L - 1;
    while (pos >= 0 && ++odometer[pos] == r) {
      odometer[pos] = 0;
      tuple[pos] = &set[0];
      --pos;
    }
    if (pos < 0) break;
    tuple[pos] = &set[odometer[pos]];
  }
  return tally.total();
}

BigInt count_motifs_join(const MotifSpec& spec, const PointSet& set, unsigned threads) {
  check_dimension(spec, set);
  return JoinCounter(spec, set).count(threads);
}

BoundCheck check_upper_bound(const BigInt& count, std::size_t r, const Rational& tau_star) {
  BoundCheck out;
  out.count = count;
  out.r = r;
  out.tau_star = tau_star;
  out.lhs = pow(count, to_u64(tau_star.get_den()));
  out.rhs = pow(BigInt(std::to_string(r)), to_u64(tau_star.get_num()));
  out.holds = out.lhs <= out.rhs;
  out.tight = out.lhs == out.rhs;
  return out;
}

BoundCheck verify_upper_bound(const MotifSpec& spec, const PointSet& set, unsigned threads) {
  const Rational tau = fractional_transversal(build_hypergraph(spec)).weight;
  return check_upper_bound(count_motifs_join(spec, set, threads), set.size(), tau);
}

}  // namespace motif
