#include "motif/hypergraph.hpp"

#include <set>
#include <utility>

#include "motif/error.hpp"
#include "motif/simplex.hpp"

namespace motif {

Hypergraph Hypergraph::dedup() const {
  Hypergraph out;
  out.n_vertices = n_vertices;
  std::set<Block> seen;
  for (const auto& e : edges) {
    if (seen.insert(e.vertices).second) out.edges.push_back(e);
  }
  return out;
}

Hypergraph build_hypergraph(const MotifSpec& spec) {
  Hypergraph h;
  h.n_vertices = spec.tuple_length();
  for (int m = 0; m < spec.dimension(); ++m) {
    const auto& part = spec.partition(m);
    for (std::size_t b = 0; b < part.size(); ++b) h.edges.push_back({part[b], m, static_cast<int>(b)});
  }
  return h;
}

bool is_fractional_transversal(const Hypergraph& h, const FractionalTransversal& t) {
  if (static_cast<int>(t.g.size()) != h.n_vertices) return false;
  Rational total;
  for (const auto& w : t.g) {
    if (sgn(w) < 0) return false;
    total += w;
  }
  if (total != t.weight) return false;
  for (const auto& e : h.edges) {
    Rational load;
    for (int x : e.vertices) load += t.g[x];
    if (load < 1) return false;
  }
  return true;
}

bool is_fractional_matching(const Hypergraph& h, const FractionalMatching& m) {
  if (m.f.size() != h.edges.size()) return false;
  Rational total;
  std::vector<Rational> load(h.n_vertices);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    if (sgn(m.f[e]) < 0) return false;
    total += m.f[e];
    for (int x : h.edges[e].vertices) load[x] += m.f[e];
  }
  if (total != m.weight) return false;
  for (const auto& l : load) {
    if (l > 1) return false;
  }
  return true;
}

FractionalTransversal fractional_transversal(const Hypergraph& h) {
  const Hypergraph d = h.dedup();
  lp::Program prog;
  prog.num_vars = d.n_vertices;
  prog.direction = lp::Direction::Minimize;
  prog.objective.assign(d.n_vertices, 1);
  for (const auto& e : d.edges) {
    lp::Constraint c{std::vector<Rational>(d.n_vertices), lp::Sense::GreaterEqual, 1};
    for (int x : e.vertices) c.coeffs[x] = 1;
    prog.constraints.push_back(std::move(c));
  }
  lp::Solution sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal) {
    throw Error(ErrorCode::InvariantViolation, "transversal LP did not reach an optimum");
  }
  FractionalTransversal t{std::move(sol.x), sol.value};
  if (!is_fractional_transversal(h, t)) {
    throw Error(ErrorCode::InvariantViolation, "transversal LP returned an infeasible certificate");
  }
  return t;
}

namespace {

lp::Program matching_program(const Hypergraph& h, int extra_vars) {
  const int n = static_cast<int>(h.edges.size()) + extra_vars;
  lp::Program prog;
  prog.num_vars = n;
  prog.direction = lp::Direction::Maximize;
  prog.objective.assign(n, 0);
  for (int x = 0; x < h.n_vertices; ++x) {
    lp::Constraint c{std::vector<Rational>(n), lp::Sense::LessEqual, 1};
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      for (int v : h.edges[e].vertices) {
        if (v == x) c.coeffs[e] = 1;
      }
    }
    prog.constraints.push_back(std::move(c));
  }
  return prog;
}

FractionalMatching solve_matching(const Hypergraph& h) {
  lp::Program prog = matching_program(h, 0);
  prog.objective.assign(h.edges.size(), 1);
  lp::Solution sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal) {
    throw Error(ErrorCode::InvariantViolation, "matching LP did not reach an optimum");
  }
  return {std::move(sol.x), sol.value};
}

// Second pass: keep total weight at nu* and maximize the smallest edge weight t.
FractionalMatching balance_matching(const Hypergraph& h, const Rational& nu_star) {
  const int edges = static_cast<int>(h.edges.size());
  const int t_var = edges;
  lp::Program prog = matching_program(h, 1);
  prog.objective[t_var] = 1;
  lp::Constraint total{std::vector<Rational>(edges + 1), lp::Sense::Equal, nu_star};
  for (int e = 0; e < edges; ++e) total.coeffs[e] = 1;
  prog.constraints.push_back(std::move(total));
  for (int e = 0; e < edges; ++e) {
    lp::Constraint floor{std::vector<Rational>(edges + 1), lp::Sense::GreaterEqual, 0};
    floor.coeffs[e] = 1;
    floor.coeffs[t_var] = -1;
    prog.constraints.push_back(std::move(floor));
  }
  lp::Solution sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal) {
    throw Error(ErrorCode::InvariantViolation, "balancing LP did not reach an optimum");
  }
  sol.x.resize(edges);
  FractionalMatching m{std::move(sol.x), 0};
  for (const auto& v : m.f) m.weight += v;
  return m;
}

}  // namespace

FractionalMatching fractional_matching(const Hypergraph& h, MatchingChoice choice) {
  FractionalMatching m = solve_matching(h);
  if (choice == MatchingChoice::Balanced && !h.edges.empty()) m = balance_matching(h, m.weight);

  if (!is_fractional_matching(h, m)) {
    throw Error(ErrorCode::InvariantViolation, "matching LP returned an infeasible certificate");
  }
  const FractionalTransversal t = fractional_transversal(h);
  if (t.weight != m.weight) {
    throw Error(ErrorCode::InvariantViolation,
                "LP duality broken: tau* = " + to_string(t.weight) + ", nu* = " + to_string(m.weight));
  }
  if (sgn(m.weight) > 0) {
    std::vector<Rational> load(h.n_vertices);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      for (int x : h.edges[e].vertices) load[x] += m.f[e];
    }
    bool saturated = false;
    for (const auto& l : load) saturated = saturated || l == 1;
    if (!saturated) throw Error(ErrorCode::InvariantViolation, "optimal matching saturates no vertex");
  }
  return m;
}

int distinct_tableau_rows(const MotifSpec& spec, const FractionalMatching& f) {
  const CoordinateMatrix matrix = build_matrix(spec);
  if (static_cast<int>(f.f.size()) != matrix.variable_count()) {
    throw Error(ErrorCode::InvalidArgument, "matching does not belong to this specification");
  }
  // (is_variable, value): a symbol X_{f(e)} or a constant.
  using Entry = std::pair<bool, Rational>;
  std::set<std::vector<Entry>> rows;
  for (int i = 0; i < matrix.rows(); ++i) {
    std::vector<Entry> row;
    for (int m = 0; m < matrix.cols(); ++m) {
      const Cell& cell = matrix.at(i, m);
      if (const auto* id = std::get_if<BlockId>(&cell)) {
        row.emplace_back(true, f.f[id->value]);
      } else {
        row.emplace_back(false, std::get<Rational>(cell));
      }
    }
    rows.insert(std::move(row));
  }
  return static_cast<int>(rows.size());
}

}  // namespace motif
