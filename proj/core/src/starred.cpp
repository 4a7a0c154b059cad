#include "motif/starred.hpp"

#include <algorithm>
#include <functional>

#include "motif/error.hpp"

namespace motif {

StarProfile star_profile(const MotifSpec& spec) {
  if (!classify_spec(spec).single_starred) {
    throw Error(ErrorCode::NotSingleStarred, "specification is not single-starred");
  }
  StarProfile prof;
  prof.L = spec.tuple_length();
  prof.p = spec.dimension();
  prof.cells.assign(prof.L, std::vector<int>(prof.p, -1));

  std::vector<int> star_col(prof.L, -1);
  int next_var = 0;
  for (int m = 0; m < prof.p; ++m) {
    for (const auto& block : spec.partition(m)) {
      if (block.size() == 1) {
        star_col[block.front()] = m;
        continue;
      }
      for (int row : block) prof.cells[row][m] = next_var;
      ++next_var;
    }
  }
  prof.k = next_var;

  for (int m = 0; m < prof.p; ++m) {
    int alpha = static_cast<int>(std::count(star_col.begin(), star_col.end(), m));
    if (alpha > 0) {
      prof.star_columns.push_back(m);
      prof.multiplicities.push_back(alpha);
    }
  }
  prof.sigma.resize(prof.L);
  for (int row = 0; row < prof.L; ++row) {
    auto it = std::find(prof.star_columns.begin(), prof.star_columns.end(), star_col[row]);
    prof.sigma[row] = static_cast<int>(it - prof.star_columns.begin());
  }

  BigInt num = 1;
  for (int alpha : prof.multiplicities) num *= pow(BigInt(alpha), static_cast<std::uint64_t>(alpha));
  prof.constant = Rational(num, pow(BigInt(prof.L), static_cast<std::uint64_t>(prof.L)));
  prof.constant.canonicalize();
  return prof;
}

Thresholds thresholds(int L) {
  if (L < 1) throw Error(ErrorCode::InvalidArgument, "L must be positive");
  const BigInt big_l(L);
  Thresholds th;
  th.m1 = big_l * (pow(big_l, static_cast<std::uint64_t>(L)) + 1);
  th.m = pow(BigInt(2 * th.m1), static_cast<std::uint64_t>(L - 1)) * big_l * big_l + 1;
  return th;
}

Pattern row_pattern(const StarProfile& profile, const Assignment& v, int row) {
  Pattern pat(profile.p);
  for (int m = 0; m < profile.p; ++m) {
    const int var = profile.cells[row][m];
    if (var >= 0) pat[m] = v.at(var);
  }
  return pat;
}

CenterPoint evaluate_center(const StarProfile& profile, const Thresholds& th, const PointSet& set,
                            const Assignment& v) {
  CenterPoint c;
  c.v = v;
  const BigInt r(std::to_string(set.size()));
  int above_m = 0;
  int above_m1 = 0;
  for (int row = 0; row < profile.L; ++row) {
    const std::size_t n = line_count(set, row_pattern(profile, v, row));
    c.line_counts.push_back(n);
    // n >= r / M  <=>  n * M >= r
    const BigInt scaled(std::to_string(n));
    if (scaled * th.m >= r) ++above_m;
    if (scaled * th.m1 >= r) ++above_m1;
  }
  c.is_center = above_m >= profile.L - 1;
  c.is_hypercenter = above_m1 == profile.L;
  return c;
}

std::set<Assignment> anchored_assignments(const StarProfile& profile, const PointSet& set, int omitted_row) {
  std::set<Assignment> out;
  std::vector<int> rows;
  for (int row = 0; row < profile.L; ++row) {
    if (row != omitted_row) rows.push_back(row);
  }
  std::vector<std::optional<Rational>> partial(profile.k);
  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == rows.size()) {
      Assignment v;
      v.reserve(profile.k);
      for (const auto& x : partial) {
        if (!x) return;  // a variable no anchored row touches
        v.push_back(*x);
      }
      out.insert(std::move(v));
      return;
    }
    const auto& cells = profile.cells[rows[idx]];
    for (const auto& pt : set) {
      bool ok = true;
      for (int m = 0; m < profile.p && ok; ++m) {
        const int var = cells[m];
        if (var >= 0 && partial[var] && *partial[var] != pt[m]) ok = false;
      }
      if (!ok) continue;
      std::vector<int> newly;
      for (int m = 0; m < profile.p; ++m) {
        const int var = cells[m];
        if (var >= 0 && !partial[var]) {
          partial[var] = pt[m];
          newly.push_back(var);
        }
      }
      place(idx + 1);
      for (int var : newly) partial[var].reset();
    }
  };
  place(0);
  return out;
}

std::vector<CenterPoint> enumerate_centers(const MotifSpec& spec, const PointSet& set) {
  const StarProfile profile = star_profile(spec);
  const Thresholds th = thresholds(profile.L);
  std::set<Assignment> candidates;
  for (int row = 0; row < profile.L; ++row) {
    candidates.merge(anchored_assignments(profile, set, row));
  }
  std::vector<CenterPoint> centers;
  for (const auto& v : candidates) {
    CenterPoint c = evaluate_center(profile, th, set, v);
    if (c.is_center) centers.push_back(std::move(c));
  }
  const BigInt bound = BigInt(profile.L) * pow(th.m, static_cast<std::uint64_t>(profile.L - 1));
  if (BigInt(std::to_string(centers.size())) > bound) {
    throw Error(ErrorCode::InvariantViolation,
                std::to_string(centers.size()) + " centers exceed the bound " + bound.get_str());
  }
  return centers;
}

bool in_line(const Point& w, const Assignment& v, const StarProfile& profile) {
  for (int row = 0; row < profile.L; ++row) {
    if (matches(w, row_pattern(profile, v, row))) return true;
  }
  return false;
}

bool in_line(const Point& w, const Assignment& v, const MotifSpec& spec) {
  return in_line(w, v, star_profile(spec));
}

namespace {

BigInt product_of_counts(const CenterPoint& c) {
  BigInt prod = 1;
  for (std::size_t n : c.line_counts) prod *= BigInt(std::to_string(n));
  return prod;
}

}  // namespace

StructureReport structure_report(const MotifSpec& spec, const PointSet& set) {
  const StarProfile profile = star_profile(spec);
  const Thresholds th = thresholds(profile.L);
  StructureReport rep;
  rep.r = set.size();
  rep.centers = enumerate_centers(spec, set);
  rep.center_bound = BigInt(profile.L) * pow(th.m, static_cast<std::uint64_t>(profile.L - 1));

  for (const auto& c : rep.centers) {
    if (!c.is_hypercenter) continue;
    ++rep.n_hypercenters;
    // Centers are sorted by assignment, so a strict comparison keeps the smallest on ties.
    if (!rep.designated || product_of_counts(c) > product_of_counts(*rep.designated)) rep.designated = c;
  }
  rep.unique_center = rep.centers.size() == 1;
  rep.has_hypercenter = rep.n_hypercenters > 0;
  rep.unique_hypercenter = rep.n_hypercenters == 1;

  rep.all_points_in_line = std::all_of(set.begin(), set.end(), [&](const Point& w) {
    return std::any_of(rep.centers.begin(), rep.centers.end(),
                       [&](const CenterPoint& c) { return in_line(w, c.v, profile); });
  });

  if (!rep.designated) {
    rep.lines_failure = "no hypercenter";
  } else {
    std::vector<Pattern> distinct;
    for (int row = 0; row < profile.L; ++row) {
      Pattern pat = row_pattern(profile, rep.designated->v, row);
      if (std::find(distinct.begin(), distinct.end(), pat) == distinct.end()) distinct.push_back(std::move(pat));
    }
    if (distinct.size() != profile.star_columns.size()) {
      rep.lines_failure = "hypercenter has " + std::to_string(distinct.size()) + " distinct row patterns, expected q=" +
                          std::to_string(profile.star_columns.size());
    } else {
      std::sort(distinct.begin(), distinct.end(), [](const Pattern& a, const Pattern& b) {
        auto star = [](const Pattern& x) { return std::find(x.begin(), x.end(), std::nullopt) - x.begin(); };
        return star(a) < star(b);
      });
      std::size_t off_line = 0;
      std::vector<std::size_t> sizes(distinct.size(), 0);
      for (const auto& w : set) {
        auto it = std::find_if(distinct.begin(), distinct.end(), [&](const Pattern& pat) { return matches(w, pat); });
        if (it == distinct.end()) {
          ++off_line;
        } else {
          ++sizes[static_cast<std::size_t>(it - distinct.begin())];
        }
      }
      if (off_line > 0) {
        rep.lines_failure = std::to_string(off_line) + " point(s) off the q lines of the hypercenter";
      } else {
        rep.lines = std::move(distinct);
        rep.line_sizes = std::move(sizes);
      }
    }
  }
  rep.full_structure = rep.unique_center && rep.has_hypercenter && rep.all_points_in_line && !rep.lines.empty();
  return rep;
}

}  // namespace motif
