#pragma once

#include <cstddef>

#include "motif/pointset.hpp"
#include "motif/rational.hpp"
#include "motif/spec.hpp"

namespace motif {

/// Reference counter: tests every L-tuple of points against the block and constant
/// conditions directly. O(r^L); meant as an oracle.
BigInt count_motifs_naive(const MotifSpec& spec, const PointSet& set);

/// Backtracking join over the rows of the coordinate matrix. Each step binds the row with
/// the most already-bound cells and only visits points consistent with the bindings, using
/// a hash index per step. `threads` > 1 splits the first row's candidates across workers.
BigInt count_motifs_join(const MotifSpec& spec, const PointSet& set, unsigned threads = 1);

struct BoundCheck {
  BigInt count;
  std::size_t r = 0;
  Rational tau_star;
  /// count^b and r^a for tau* = a/b.
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
  bool tight = false;
};

/// Compares a motif count with r^{tau*} exactly. `holds` being false means a bug.
BoundCheck check_upper_bound(const BigInt& count, std::size_t r, const Rational& tau_star);
BoundCheck verify_upper_bound(const MotifSpec& spec, const PointSet& set, unsigned threads = 1);

}  // namespace motif
