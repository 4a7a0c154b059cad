#pragma once

#include <vector>

#include "motif/rational.hpp"

namespace motif::lp {

enum class Sense { LessEqual, GreaterEqual, Equal };
enum class Direction { Maximize, Minimize };
enum class Status { Optimal, Infeasible, Unbounded };

struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::LessEqual;
  Rational rhs;
};

/// Optimize `objective . x` subject to `constraints` and x >= 0.
struct Program {
  int num_vars = 0;
  Direction direction = Direction::Maximize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
};

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase dense tableau simplex over exact rationals with Bland's rule, so it always
/// terminates and returns the same vertex for the same input. Intended for tiny programs.
Solution solve(const Program& program);

}  // namespace motif::lp
