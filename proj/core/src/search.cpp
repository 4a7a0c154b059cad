#include "motif/search.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "motif/counting.hpp"
#include "motif/error.hpp"
#include "motif/hypergraph.hpp"
#include "motif/starred.hpp"

namespace motif {

PointSet integer_box(std::size_t side, int p) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  BigInt total = pow(BigInt(std::to_string(side)), static_cast<std::uint64_t>(p));
  if (total > 1'000'000) throw Error(ErrorCode::BudgetExceeded, "universe " + total.get_str() + " points is too large");
  std::vector<Point> points;
  std::vector<std::size_t> odometer(p, 0);
  for (std::uint64_t n = to_u64(total); n > 0; --n) {
    Point pt(p);
    for (int m = 0; m < p; ++m) pt[m] = Rational(BigInt(std::to_string(odometer[m])));
    points.push_back(std::move(pt));
    for (int m = p; m-- > 0;) {
      if (++odometer[m] < side) break;
      odometer[m] = 0;
    }
  }
  return PointSet(p, std::move(points));
}

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

struct Partial {
  BigInt best = -1;
  std::vector<std::vector<std::size_t>> argmax;
  BigInt examined = 0;
};

PointSet subset(const PointSet& universe, const std::vector<std::size_t>& idx) {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (std::size_t i : idx) pts.push_back(universe[i]);
  return PointSet(universe.dimension(), std::move(pts));
}

void consider(const MotifSpec& spec, const PointSet& universe, const std::vector<std::size_t>& idx, Partial& acc) {
  const BigInt count = count_motifs_join(spec, subset(universe, idx));
  ++acc.examined;
  if (count > acc.best) {
    acc.best = count;
    acc.argmax.clear();
  }
  if (count == acc.best) acc.argmax.push_back(idx);
}

// All r-subsets whose smallest index is `first`, in lexicographic order.
void scan_first(const MotifSpec& spec, const PointSet& universe, std::size_t r, std::size_t first, Partial& acc) {
  const std::size_t n = universe.size();
  const std::size_t rest = r - 1;
  if (n - first - 1 < rest) return;
  std::vector<std::size_t> idx(r);
  idx[0] = first;
  for (std::size_t j = 0; j < rest; ++j) idx[j + 1] = first + 1 + j;
  while (true) {
    consider(spec, universe, idx, acc);
    std::size_t j = rest;
    while (j > 0 && idx[j] == n - rest + j - 1) --j;
    if (j == 0) break;
    ++idx[j];
    for (std::size_t t = j + 1; t <= rest; ++t) idx[t] = idx[t - 1] + 1;
  }
}

Rational tau_of(const MotifSpec& spec) { return fractional_transversal(build_hypergraph(spec)).weight; }

void check_bound(const BigInt& best, std::size_t r, const Rational& tau) {
  if (!check_upper_bound(best, r, tau).holds) {
    throw Error(ErrorCode::InvariantViolation,
                "best count " + best.get_str() + " exceeds r^tau* for r=" + std::to_string(r));
  }
}

}  // namespace

SearchResult exhaustive_maximizer(const MotifSpec& spec, const PointSet& universe, std::size_t r,
                                  std::uint64_t budget, unsigned threads) {
  if (spec.dimension() != universe.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "universe dimension differs from the specification");
  }
  const std::size_t n = universe.size();
  if (r > n) throw Error(ErrorCode::InvalidArgument, "r exceeds the universe size");
  const BigInt subsets = binomial(n, r);
  if (subsets > BigInt(std::to_string(budget))) {
    throw Error(ErrorCode::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(r) + ") = " +
                                               subsets.get_str() + " subsets exceeds the budget of " +
                                               std::to_string(budget) + "; use a smaller universe or r");
  }

  SearchResult res;
  res.r = r;
  res.mode = SearchMode::Exhaustive;
  res.tau_star = tau_of(spec);

  if (r == 0) {
    res.best_count = count_motifs_join(spec, PointSet(spec.dimension()));
    res.maximizers.emplace_back(spec.dimension());
    res.sets_examined = 1;
    check_bound(res.best_count, r, res.tau_star);
    return res;
  }

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<Partial> partials(workers);
  auto work = [&](unsigned w) {
    for (std::size_t first = w; first < n; first += workers) scan_first(spec, universe, r, first, partials[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  Partial merged;
  for (auto& part : partials) {
    merged.examined += part.examined;
    if (part.best > merged.best) {
      merged.best = part.best;
      merged.argmax.clear();
    }
    if (part.best == merged.best) {
      merged.argmax.insert(merged.argmax.end(), part.argmax.begin(), part.argmax.end());
    }
  }
  std::sort(merged.argmax.begin(), merged.argmax.end());
  res.best_count = merged.best;
  res.sets_examined = merged.examined;
  for (const auto& idx : merged.argmax) res.maximizers.push_back(subset(universe, idx));
  check_bound(res.best_count, r, res.tau_star);
  return res;
}

GridCheck is_grid(const MotifSpec& spec, const PointSet& set) {
  const SpecClass cls = classify_spec(spec);
  if (!cls.uniform) throw Error(ErrorCode::NotUniform, "grid test needs a uniform specification");
  if (set.dimension() != spec.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "point-set dimension differs from the specification");
  }
  GridCheck out;
  BigInt product = 1;
  for (const auto& group : cls.uniform->groups) {
    std::set<Point> proj;
    for (const auto& pt : set) {
      Point sub;
      for (int m : group) sub.push_back(pt[m]);
      proj.insert(std::move(sub));
    }
    product *= BigInt(std::to_string(proj.size()));
    out.factors.emplace_back(proj.begin(), proj.end());
  }
  // The set always sits inside the product of its projections.
  out.is_grid = product == BigInt(std::to_string(set.size()));
  return out;
}

namespace {

Point place_in_line(const StarProfile& profile, const PointSet& set, const Assignment& v, int row) {
  Pattern pat = row_pattern(profile, v, row);
  Point pt(profile.p);
  int star = -1;
  for (int m = 0; m < profile.p; ++m) {
    if (pat[m]) {
      pt[m] = *pat[m];
    } else {
      star = m;
    }
  }
  for (long t = 0;; ++t) {
    pt[star] = Rational(t);
    if (!set.contains(pt)) return pt;
  }
}

}  // namespace

RelocationResult relocation_improve(const MotifSpec& spec, const PointSet& set, std::size_t max_iters) {
  const StarProfile profile = star_profile(spec);
  RelocationResult res{set, count_motifs_join(spec, set), 0, 0, false};
  res.final_count = res.initial_count;
  if (set.size() <= 1) {
    res.reached_fixpoint = true;
    return res;
  }

  while (res.iterations < max_iters) {
    ++res.iterations;
    const PointSet& current = res.set;

    // Point whose removal costs the fewest motifs; points are sorted, so ties keep the smallest.
    std::optional<std::pair<BigInt, std::size_t>> cheapest;
    for (std::size_t i = 0; i < current.size(); ++i) {
      BigInt loss = res.final_count - count_motifs_join(spec, current.without(current[i]));
      if (!cheapest || loss < cheapest->first) cheapest = {loss, i};
    }
    const PointSet reduced = current.without(current[cheapest->second]);

    std::optional<std::pair<BigInt, Point>> best;
    for (int row = 0; row < profile.L; ++row) {
      for (const auto& v : anchored_assignments(profile, reduced, row)) {
        BigInt prod = 1;
        for (int j = 0; j < profile.L; ++j) {
          if (j != row) prod *= BigInt(std::to_string(line_count(reduced, row_pattern(profile, v, j))));
        }
        Point candidate = place_in_line(profile, reduced, v, row);
        if (!best || prod > best->first || (prod == best->first && candidate < best->second)) {
          best = {prod, std::move(candidate)};
        }
      }
    }
    if (!best) {
      res.reached_fixpoint = true;
      break;
    }
    PointSet next = reduced.with(best->second);
    if (next == current) {
      res.reached_fixpoint = true;
      break;
    }
    BigInt next_count = count_motifs_join(spec, next);
    if (next_count < res.final_count) {
      res.reached_fixpoint = true;
      break;
    }
    res.set = std::move(next);
    res.final_count = std::move(next_count);
  }
  return res;
}

SearchResult local_search_maximizer(const MotifSpec& spec, const PointSet& universe, std::size_t r,
                                    std::uint64_t seed, std::size_t max_iters) {
  if (spec.dimension() != universe.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "universe dimension differs from the specification");
  }
  if (r > universe.size()) throw Error(ErrorCode::InvalidArgument, "r exceeds the universe size");
  std::mt19937_64 rng(seed);
  std::vector<Point> pool = universe.points();
  std::vector<Point> picked;
  std::sample(pool.begin(), pool.end(), std::back_inserter(picked), static_cast<std::ptrdiff_t>(r), rng);
  RelocationResult improved = relocation_improve(spec, PointSet(spec.dimension(), std::move(picked)), max_iters);

  SearchResult res;
  res.r = r;
  res.mode = SearchMode::LocalSearch;
  res.tau_star = tau_of(spec);
  res.best_count = improved.final_count;
  res.maximizers.push_back(std::move(improved.set));
  res.sets_examined = BigInt(std::to_string(improved.iterations));
  check_bound(res.best_count, r, res.tau_star);
  return res;
}

}  // namespace motif
