#pragma once

#include <vector>

#include "motif/rational.hpp"
#include "motif/spec.hpp"

namespace motif {

struct Edge {
  Block vertices;
  /// Originating coordinate and block index within that coordinate's partition.
  int col = 0;
  int block = 0;
};

/// Vertices are the tuple positions 0..L-1; one edge per block of each partition, in
/// block-id order (so edge e belongs to variable BlockId{e} of the coordinate matrix).
struct Hypergraph {
  int n_vertices = 0;
  std::vector<Edge> edges;

  /// Same hypergraph with edges over identical vertex sets merged (first occurrence kept).
  Hypergraph dedup() const;
};

Hypergraph build_hypergraph(const MotifSpec& spec);

/// Weights per vertex; every edge carries total weight >= 1.
struct FractionalTransversal {
  std::vector<Rational> g;
  Rational weight;
};

/// Weights per edge; every vertex carries total weight <= 1.
struct FractionalMatching {
  std::vector<Rational> f;
  Rational weight;
};

bool is_fractional_transversal(const Hypergraph& h, const FractionalTransversal& t);
bool is_fractional_matching(const Hypergraph& h, const FractionalMatching& m);

/// Optimal fractional transversal; its weight is tau*. Zero edges gives tau* = 0, g = 0.
FractionalTransversal fractional_transversal(const Hypergraph& h);

enum class MatchingChoice {
  /// Among optimal matchings, one maximizing the smallest edge weight (f = 1/3 on K4).
  Balanced,
  /// The first optimal vertex reached by the simplex.
  Vertex,
};

/// Optimal fractional matching with exact rational values; its weight is nu*.
/// Checks tau* == nu* and that some vertex is saturated when nu* > 0, throwing
/// Error{InvariantViolation} if either fails.
FractionalMatching fractional_matching(const Hypergraph& h, MatchingChoice choice = MatchingChoice::Balanced);

/// Number of distinct rows of the coordinate matrix once each variable is replaced by a
/// symbol for the matching value of its edge (constants kept). `f` is indexed like
/// build_hypergraph(spec).edges.
int distinct_tableau_rows(const MotifSpec& spec, const FractionalMatching& f);

}  // namespace motif
