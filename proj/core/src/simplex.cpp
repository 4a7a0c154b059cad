#include "motif/simplex.hpp"

#include <optional>

#include "motif/error.hpp"

namespace motif::lp {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> rows;  // last entry of each row is the rhs
  std::vector<int> basis;
  int cols = 0;                             // structural + slack + artificial columns

  const Rational& rhs(std::size_t i) const { return rows[i].back(); }

  void pivot(std::size_t r, int c) {
    const Rational piv = rows[r][c];
    for (auto& v : rows[r]) v /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational factor = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= factor * rows[r][j];
    }
    basis[r] = c;
  }
};

enum class RunResult { Optimal, Unbounded };

// Maximizes cost . x over the current tableau, only letting columns < `allowed` enter.
RunResult run(Tableau& t, const std::vector<Rational>& cost, int allowed) {
  while (true) {
    std::optional<int> entering;
    for (int j = 0; j < allowed && !entering; ++j) {
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.rows.size(); ++i) reduced -= cost[t.basis[i]] * t.rows[i][j];
      if (sgn(reduced) > 0) entering = j;
    }
    if (!entering) return RunResult::Optimal;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const Rational& a = t.rows[i][*entering];
      if (sgn(a) <= 0) continue;
      Rational ratio = t.rhs(i) / a;
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && t.basis[i] < t.basis[*leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (!leaving) return RunResult::Unbounded;
    t.pivot(*leaving, *entering);
  }
}

}  // namespace

Solution solve(const Program& program) {
  const int n = program.num_vars;
  if (static_cast<int>(program.objective.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "objective length does not match variable count");
  }

  // Normalize every row to a nonnegative right-hand side.
  std::vector<Constraint> cons = program.constraints;
  int slack_count = 0;
  int artificial_count = 0;
  for (auto& c : cons) {
    if (static_cast<int>(c.coeffs.size()) != n) {
      throw Error(ErrorCode::InvalidArgument, "constraint length does not match variable count");
    }
    if (sgn(c.rhs) < 0) {
      for (auto& a : c.coeffs) a = -a;
      c.rhs = -c.rhs;
      if (c.sense == Sense::LessEqual) {
        c.sense = Sense::GreaterEqual;
      } else if (c.sense == Sense::GreaterEqual) {
        c.sense = Sense::LessEqual;
      }
    }
    if (c.sense != Sense::Equal) ++slack_count;
    if (c.sense != Sense::LessEqual) ++artificial_count;
  }

  const int first_slack = n;
  const int first_artificial = n + slack_count;
  Tableau t;
  t.cols = first_artificial + artificial_count;
  int next_slack = first_slack;
  int next_artificial = first_artificial;
  for (const auto& c : cons) {
    std::vector<Rational> row(t.cols + 1);
    for (int j = 0; j < n; ++j) row[j] = c.coeffs[j];
    row.back() = c.rhs;
    int basic = -1;
    if (c.sense == Sense::LessEqual) {
      row[next_slack] = 1;
      basic = next_slack++;
    } else {
      if (c.sense == Sense::GreaterEqual) row[next_slack++] = -1;
      row[next_artificial] = 1;
      basic = next_artificial++;
    }
    t.rows.push_back(std::move(row));
    t.basis.push_back(basic);
  }

  if (artificial_count > 0) {
    std::vector<Rational> phase1(t.cols);
    for (int j = first_artificial; j < t.cols; ++j) phase1[j] = -1;
    run(t, phase1, t.cols);
    Rational infeasibility;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.basis[i] >= first_artificial) infeasibility += t.rhs(i);
    }
    if (sgn(infeasibility) != 0) return {Status::Infeasible, 0, {}};

    // Pivot degenerate artificials out of the basis; drop rows that are linearly redundant.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::optional<int> col;
      for (int j = 0; j < first_artificial && !col; ++j) {
        if (sgn(t.rows[i][j]) != 0) col = j;
      }
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> cost(t.cols);
  const bool maximize = program.direction == Direction::Maximize;
  for (int j = 0; j < n; ++j) cost[j] = maximize ? program.objective[j] : Rational(-program.objective[j]);
  if (run(t, cost, first_artificial) == RunResult::Unbounded) return {Status::Unbounded, 0, {}};

  Solution sol;
  sol.status = Status::Optimal;
  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.rhs(i);
  }
  for (int j = 0; j < n; ++j) sol.value += program.objective[j] * sol.x[j];
  return sol;
}

}  // namespace motif::lp
