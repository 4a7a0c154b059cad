#include "motif/constructions.hpp"

#include <set>

#include "motif/error.hpp"
#include "motif/starred.hpp"

namespace motif {

namespace {

Rational from_size(std::size_t n) { return Rational(BigInt(std::to_string(n))); }

}  // namespace

GridConstruction grid_set(const MotifSpec& spec, const std::vector<std::size_t>& sizes) {
  const SpecClass cls = classify_spec(spec);
  if (!cls.uniform) throw Error(ErrorCode::NotUniform, "grid construction needs a uniform specification");
  const auto& groups = cls.uniform->groups;
  if (sizes.size() != groups.size()) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(groups.size()) + " grid sizes, got " +
                                                std::to_string(sizes.size()));
  }
  std::size_t total = 1;
  for (std::size_t s : sizes) {
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "grid sizes must be positive");
    if (__builtin_mul_overflow(total, s, &total) || total > 10'000'000) {
      throw Error(ErrorCode::InvalidArgument, "grid too large");
    }
  }

  const int p = spec.dimension();
  std::vector<Point> points;
  points.reserve(total);
  std::vector<std::size_t> odometer(groups.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    Point pt(p);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (int m : groups[g]) pt[m] = from_size(odometer[g] + 1);
    }
    points.push_back(std::move(pt));
    for (std::size_t g = groups.size(); g-- > 0;) {
      if (++odometer[g] < sizes[g]) break;
      odometer[g] = 0;
    }
  }
  Rational exponent(spec.tuple_length(), cls.uniform->edge_size);
  exponent.canonicalize();
  return {PointSet(p, std::move(points)), exponent};
}

MatchingConstruction matching_construction(const MotifSpec& spec, std::size_t M, MatchingChoice choice) {
  if (M == 0) throw Error(ErrorCode::InvalidArgument, "M must be positive");
  const Hypergraph h = build_hypergraph(spec);
  MatchingConstruction out{PointSet(spec.dimension()), fractional_matching(h, choice), 1, 1, 0, false};

  std::vector<Rational> positive;
  for (const auto& v : out.matching.f) {
    if (sgn(v) > 0) positive.push_back(v);
  }
  out.trivial = positive.empty();
  out.d = lcm_of_denominators(positive);

  // Range of each variable: M^{d f(e)}.
  const BigInt big_m(std::to_string(M));
  std::vector<std::uint64_t> range(h.edges.size(), 1);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const Rational exponent = out.matching.f[e] * Rational(out.d);
    range[e] = to_u64(pow(big_m, to_u64(exponent.get_num())));
  }
  out.guarantee = pow(big_m, to_u64(Rational(out.matching.weight * Rational(out.d)).get_num()));

  const CoordinateMatrix matrix = build_matrix(spec);
  std::set<Point> rows;
  for (int i = 0; i < matrix.rows(); ++i) {
    std::vector<int> vars;
    for (int m = 0; m < matrix.cols(); ++m) {
      if (const auto* id = std::get_if<BlockId>(&matrix.at(i, m))) vars.push_back(id->value);
    }
    std::uint64_t combos = 1;
    for (int v : vars) {
      if (__builtin_mul_overflow(combos, range[v], &combos) || combos > 10'000'000) {
        throw Error(ErrorCode::InvalidArgument, "matching construction too large for M=" + std::to_string(M));
      }
    }
    std::vector<std::uint64_t> odometer(vars.size(), 0);
    for (std::uint64_t c = 0; c < combos; ++c) {
      Point pt(matrix.cols());
      std::size_t k = 0;
      for (int m = 0; m < matrix.cols(); ++m) {
        const Cell& cell = matrix.at(i, m);
        if (std::holds_alternative<BlockId>(cell)) {
          pt[m] = Rational(BigInt(std::to_string(odometer[k++] + 1)));
        } else {
          pt[m] = std::get<Rational>(cell);
        }
      }
      rows.insert(std::move(pt));
      for (std::size_t j = vars.size(); j-- > 0;) {
        if (++odometer[j] < range[vars[j]]) break;
        odometer[j] = 0;
      }
    }
  }
  out.set = PointSet(spec.dimension(), std::vector<Point>(rows.begin(), rows.end()));
  out.distinct_rows = distinct_tableau_rows(spec, out.matching);

  const BigInt lower = pow(big_m, to_u64(out.d));
  const BigInt size(std::to_string(out.set.size()));
  if (!out.trivial && (size < lower || size > lower * out.distinct_rows)) {
    throw Error(ErrorCode::InvariantViolation, "matching construction size " + size.get_str() +
                                                   " outside [M^d, L' M^d] = [" + lower.get_str() + ", " +
                                                   BigInt(lower * out.distinct_rows).get_str() + "]");
  }
  return out;
}

LinesConstruction single_starred_construction(const MotifSpec& spec, std::size_t r) {
  const StarProfile profile = star_profile(spec);
  const auto L = static_cast<std::size_t>(spec.tuple_length());
  if (r < L) {
    throw Error(ErrorCode::RTooSmall, "need r >= L = " + std::to_string(L) + ", got " + std::to_string(r));
  }
  LinesConstruction out{PointSet(spec.dimension()), r / L, 1};
  const int p = spec.dimension();

  std::vector<Point> points;
  for (std::size_t i = 0; i < profile.star_columns.size(); ++i) {
    const std::size_t len = static_cast<std::size_t>(profile.multiplicities[i]) * out.n;
    for (std::size_t t = 1; t <= len; ++t) {
      Point pt(p, Rational(0));
      pt[profile.star_columns[i]] = from_size(t);
      points.push_back(std::move(pt));
    }
    out.guarantee *= pow(BigInt(std::to_string(len)), static_cast<std::uint64_t>(profile.multiplicities[i]));
  }
  // Padding: first coordinate beyond every value used so far, the rest -1.
  for (std::size_t j = 0; points.size() < r; ++j) {
    Point pt(p, Rational(-1));
    pt[0] = from_size(L * out.n + 1 + j);
    points.push_back(std::move(pt));
  }
  out.set = PointSet(p, std::move(points));
  return out;
}

}  // namespace motif
