#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "motif/constructions.hpp"
#include "motif/counting.hpp"
#include "motif/error.hpp"
#include "motif/hypergraph.hpp"
#include "motif/search.hpp"
#include "motif/spec_io.hpp"
#include "motif/starred.hpp"

namespace motif::cli {

namespace {

namespace fs = std::filesystem;

std::string num(std::size_t n) { return std::to_string(n); }

std::string block_text(const Block& block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) s += (i ? "," : "") + std::to_string(block[i] + 1);
  return s + "}";
}

template <typename T, typename F>
std::vector<std::string> map_strings(const std::vector<T>& xs, F f) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

std::vector<std::string> rationals(const std::vector<Rational>& xs) {
  return map_strings(xs, [](const Rational& r) { return to_string(r); });
}

std::vector<std::string> points_text(const PointSet& set) {
  return map_strings(set.points(), [](const Point& p) { return to_string(p); });
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

void record_input(Report& rep, const std::string& role, const std::string& path) {
  Report& in = rep.child("inputs").child(role);
  in.set("path", path);
  in.set("sha256", sha256_hex(read_file(path)));
}

void bound_into(Report& out, const BoundCheck& b) {
  out.set("tau_star", to_string(b.tau_star));
  out.set("count^b", to_string(b.lhs));
  out.set("r^a", to_string(b.rhs));
  out.set("holds", b.holds);
  out.set("tight", b.tight);
}

void require_bound(const BoundCheck& b) {
  if (!b.holds) {
    throw Error(ErrorCode::InvariantViolation, "upper bound violated: " + b.lhs.get_str() + " > " + b.rhs.get_str());
  }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const Rational v = parse_rational(field);
    if (v.get_den() != 1 || v < 1) throw Error(ErrorCode::InvalidArgument, "grid sizes must be positive integers");
    sizes.push_back(to_u64(v.get_num()));
  }
  if (sizes.empty()) throw Error(ErrorCode::InvalidArgument, "--sizes needs at least one value");
  return sizes;
}

// "s^p" describes the integer box {0..s-1}^p.
std::pair<std::size_t, int> parse_universe(const std::string& text) {
  const auto caret = text.find('^');
  if (caret == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--universe must look like s^p, e.g. 2^3");
  const Rational s = parse_rational(text.substr(0, caret));
  const Rational p = parse_rational(text.substr(caret + 1));
  if (s.get_den() != 1 || p.get_den() != 1 || s < 1 || p < 1) {
    throw Error(ErrorCode::InvalidArgument, "--universe needs positive integers s and p");
  }
  return {to_u64(s.get_num()), static_cast<int>(to_u64(p.get_num()))};
}

void profile_into(Report& out, const StarProfile& prof) {
  out.set("star_columns", map_strings(prof.star_columns, [](int c) { return std::to_string(c + 1); }));
  out.set("multiplicities", map_strings(prof.multiplicities, [](int a) { return std::to_string(a); }));
  out.set("sigma", map_strings(prof.sigma, [](int s) { return std::to_string(s + 1); }));
  out.set("k", std::to_string(prof.k));
  out.set("constant_C", to_string(prof.constant));
  std::vector<std::string> rows;
  for (const auto& row : prof.cells) {
    std::string s = "(";
    for (std::size_t m = 0; m < row.size(); ++m) s += (m ? "," : "") + (row[m] < 0 ? std::string("*") : "v" + std::to_string(row[m] + 1));
    rows.push_back(s + ")");
  }
  out.set("tableau", std::move(rows));
}

void lines_construction_into(Report& out, const MotifSpec& spec, std::size_t r, std::size_t count_limit) {
  const LinesConstruction c = single_starred_construction(spec, r);
  out.set("r", num(c.set.size()));
  out.set("N", num(c.n));
  out.set("guarantee", to_string(c.guarantee));
  if (c.set.size() <= count_limit) {
    const BigInt count = count_motifs_join(spec, c.set);
    out.set("count", to_string(count));
    out.set("guarantee_met", count >= c.guarantee);
    Rational ratio(count, pow(BigInt(std::to_string(r)), static_cast<std::uint64_t>(spec.tuple_length())));
    ratio.canonicalize();
    out.set("count/r^L", to_string(ratio));
    const BoundCheck b = check_upper_bound(count, c.set.size(), fractional_transversal(build_hypergraph(spec)).weight);
    require_bound(b);
    bound_into(out.child("upper_bound"), b);
  }
}

void grid_verdict_into(Report& out, const MotifSpec& spec, const PointSet& set) {
  const GridCheck g = is_grid(spec, set);
  out.set("is_grid", g.is_grid);
  if (g.is_grid) {
    out.set("factor_sizes", map_strings(g.factors, [](const std::vector<Point>& f) { return std::to_string(f.size()); }));
  }
}

void structure_summary_into(Report& out, const StructureReport& rep) {
  out.set("centers", num(rep.centers.size()));
  out.set("hypercenters", num(rep.n_hypercenters));
  out.set("center_bound", to_string(rep.center_bound));
  out.set("unique_center", rep.unique_center);
  out.set("has_hypercenter", rep.has_hypercenter);
  out.set("unique_hypercenter", rep.unique_hypercenter);
  out.set("all_points_in_line", rep.all_points_in_line);
  if (rep.designated) out.set("designated_center", rationals(rep.designated->v));
  if (!rep.lines.empty()) {
    out.set("q_lines", map_strings(rep.lines, [](const Pattern& p) { return to_string(p); }));
    out.set("line_sizes", map_strings(rep.line_sizes, [](std::size_t n) { return std::to_string(n); }));
  } else {
    out.set("q_lines_failure", rep.lines_failure);
  }
  out.set("full_structure", rep.full_structure);
}

void search_into(Report& out, const MotifSpec& spec, const SearchResult& res, const std::string& out_dir) {
  out.set("mode", res.mode == SearchMode::Exhaustive ? "exhaustive" : "local");
  out.set("r", num(res.r));
  out.set("sets_examined", to_string(res.sets_examined));
  out.set("best_count", to_string(res.best_count));
  bound_into(out.child("upper_bound"), check_upper_bound(res.best_count, res.r, res.tau_star));
  out.set("maximizer_count", num(res.maximizers.size()));
  const SpecClass cls = classify_spec(spec);
  for (std::size_t i = 0; i < res.maximizers.size(); ++i) {
    const PointSet& set = res.maximizers[i];
    Report& m = out.append("maximizers");
    m.set("points", points_text(set));
    if (cls.uniform) grid_verdict_into(m, spec, set);
    if (cls.single_starred && !set.empty()) structure_summary_into(m.child("structure"), structure_report(spec, set));
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      const fs::path file = fs::path(out_dir) / ("maximizer_" + std::to_string(i + 1) + ".pts");
      save_point_set_file(file, set);
      m.set("file", file.string());
    }
  }
}

// One-command reproduction of the worked examples on the built-in fixtures.
void paper_examples_into(Report& out, unsigned threads) {
  const MotifSpec intro = fixtures::intro_spec();
  const MotifSpec corner = fixtures::corner_spec();
  out.child("fixtures").set("intro", serialize_spec(intro));
  out.child("fixtures").set("corner", serialize_spec(corner));
  analyze_into(out.child("analyze_intro"), intro);
  analyze_into(out.child("analyze_corner"), corner);

  for (const auto& sizes : std::vector<std::vector<std::size_t>>{{2, 2, 2}, {2, 3, 4}, {3, 3, 3}}) {
    const GridConstruction g = grid_set(intro, sizes);
    Report& r = out.append("grids");
    r.set("sizes", map_strings(sizes, [](std::size_t s) { return std::to_string(s); }));
    count_into(r, intro, g.set, Engine::Join, threads);
    r.set("equals_r^(L/n)", eq_power(count_motifs_join(intro, g.set, threads), BigInt(std::to_string(g.set.size())), g.exponent));
  }

  for (std::size_t M : {2, 3}) {
    const MatchingConstruction c = matching_construction(intro, M);
    Report& r = out.append("matching_intro");
    r.set("M", num(M));
    r.set("d", to_string(c.d));
    r.set("size", num(c.set.size()));
    r.set("L_prime", std::to_string(c.distinct_rows));
    r.set("guarantee", to_string(c.guarantee));
    r.set("count", to_string(count_motifs_join(intro, c.set, threads)));
  }
  {
    const MatchingConstruction c = matching_construction(corner, 2);
    Report& r = out.append("matching_corner");
    r.set("M", "2");
    r.set("d", to_string(c.d));
    r.set("size", num(c.set.size()));
    r.set("guarantee", to_string(c.guarantee));
    r.set("count", to_string(count_motifs_join(corner, c.set, threads)));
  }

  for (std::size_t r : {6, 9, 12, 15}) {
    Report& rep = out.append("lines_corner");
    lines_construction_into(rep, corner, r, 64);
    structure_summary_into(rep.child("structure"), structure_report(corner, single_starred_construction(corner, r).set));
  }

  const PointSet cube = integer_box(2, 3);
  for (std::size_t r = 1; r <= cube.size(); ++r) {
    const SearchResult res = exhaustive_maximizer(intro, cube, r, kDefaultSubsetBudget, threads);
    Report& rep = out.append("maximize_intro_2^3");
    rep.set("r", num(r));
    rep.set("best_count", to_string(res.best_count));
    rep.set("maximizers", num(res.maximizers.size()));
    const auto grids = std::count_if(res.maximizers.begin(), res.maximizers.end(),
                                     [&](const PointSet& s) { return is_grid(intro, s).is_grid; });
    rep.set("grid_maximizers", num(static_cast<std::size_t>(grids)));
  }
}

struct Options {
  std::string format = "text";
  unsigned threads = 1;
  bool timing = false;

  std::string spec_file;
  std::string points_file;
  std::string engine = "both";
  std::string kind;
  std::string sizes;
  std::size_t M = 0;
  std::size_t r = 0;
  std::size_t count_limit = 64;
  std::string output;
  std::string universe;
  std::string mode = "exhaustive";
  std::uint64_t budget = kDefaultSubsetBudget;
  std::uint64_t seed = 1;
  std::size_t iters = 100;
  std::string out_dir;
  std::string write_dir;
};

}  // namespace

void analyze_into(Report& out, const MotifSpec& spec) {
  const SpecClass cls = classify_spec(spec);
  out.set("L", std::to_string(spec.tuple_length()));
  out.set("p", std::to_string(spec.dimension()));
  out.set("class", describe(cls));
  if (cls.uniform) {
    out.set("uniform_permutation", map_strings(cls.uniform->permutation, [](int m) { return std::to_string(m + 1); }));
  }

  const Hypergraph h = build_hypergraph(spec);
  Report& hg = out.child("hypergraph");
  hg.set("vertices", std::to_string(h.n_vertices));
  hg.set("edges", map_strings(h.edges, [](const Edge& e) { return block_text(e.vertices); }));
  hg.set("distinct_edges", num(h.dedup().edges.size()));

  const FractionalTransversal g = fractional_transversal(h);
  const FractionalMatching f = fractional_matching(h);
  out.set("tau_star", to_string(g.weight));
  out.set("nu_star", to_string(f.weight));
  out.set("duality", g.weight == f.weight);
  out.set("transversal_g", rationals(g.g));
  out.set("matching_f", rationals(f.f));
  out.set("L_prime", std::to_string(distinct_tableau_rows(spec, f)));

  if (cls.single_starred) {
    profile_into(out.child("star_profile"), star_profile(spec));
    const Thresholds th = thresholds(spec.tuple_length());
    out.child("thresholds").set("M1", to_string(th.m1));
    out.child("thresholds").set("M", to_string(th.m));
  }
}

void count_into(Report& out, const MotifSpec& spec, const PointSet& set, Engine engine, unsigned threads) {
  out.set("r", num(set.size()));
  std::optional<BigInt> naive;
  std::optional<BigInt> join;
  if (engine != Engine::Join) naive = count_motifs_naive(spec, set);
  if (engine != Engine::Naive) join = count_motifs_join(spec, set, threads);
  if (naive) out.set("count_naive", to_string(*naive));
  if (join) out.set("count_join", to_string(*join));
  if (naive && join && *naive != *join) {
    throw Error(ErrorCode::EngineDisagreement, "naive " + naive->get_str() + " != join " + join->get_str());
  }
  const BigInt count = join ? *join : *naive;
  out.set("count", to_string(count));
  const BoundCheck b = check_upper_bound(count, set.size(), fractional_transversal(build_hypergraph(spec)).weight);
  bound_into(out.child("upper_bound"), b);
  require_bound(b);
}

void structure_into(Report& out, const MotifSpec& spec, const PointSet& set) {
  const StructureReport rep = structure_report(spec, set);
  out.set("r", num(rep.r));
  structure_summary_into(out, rep);
  for (const auto& c : rep.centers) {
    Report& entry = out.append("center_list");
    entry.set("v", rationals(c.v));
    entry.set("line_counts", map_strings(c.line_counts, [](std::size_t n) { return std::to_string(n); }));
    entry.set("hypercenter", c.is_hypercenter);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of motif specifications and motif counts in point sets", "motif"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--threads", opt.threads, "Worker cap for counting and search")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", opt.timing, "Append wall-clock timing (breaks byte-stable output)");

  auto* analyze = app.add_subcommand("analyze", "Classify a spec and solve its fractional transversal/matching LPs");
  analyze->add_option("spec", opt.spec_file, "Spec file")->required();

  auto* count = app.add_subcommand("count", "Count motifs in a point set and check the r^tau* bound");
  count->add_option("spec", opt.spec_file, "Spec file")->required();
  count->add_option("points", opt.points_file, "Point-set file")->required();
  count->add_option("--engine", opt.engine, "Counting engine")->check(CLI::IsMember({"naive", "join", "both"}));

  auto* construct = app.add_subcommand("construct", "Generate an extremal point set");
  construct->add_option("spec", opt.spec_file, "Spec file")->required();
  construct->add_option("--kind", opt.kind, "grid | matching | lines")
      ->required()
      ->check(CLI::IsMember({"grid", "matching", "lines"}));
  construct->add_option("--sizes", opt.sizes, "Grid factor sizes, comma separated (grid)");
  construct->add_option("--M", opt.M, "Value-range base M (matching)");
  construct->add_option("--r", opt.r, "Target size (lines)");
  construct->add_option("--count-limit", opt.count_limit, "Count motifs when the set has at most this many points");
  construct->add_option("-o,--output", opt.output, "Write the point set to this file");

  auto* maximize = app.add_subcommand("maximize", "Search for point sets with the most motifs");
  maximize->add_option("spec", opt.spec_file, "Spec file")->required();
  maximize->add_option("--universe", opt.universe, "Integer box s^p, i.e. {0..s-1}^p")->required();
  maximize->add_option("--r", opt.r, "Subset size")->required();
  maximize->add_option("--mode", opt.mode, "exhaustive | local")->check(CLI::IsMember({"exhaustive", "local"}));
  maximize->add_option("--budget", opt.budget, "Maximum number of subsets (exhaustive)");
  maximize->add_option("--seed", opt.seed, "Seed for the starting set (local)");
  maximize->add_option("--iters", opt.iters, "Relocation iterations (local)");
  maximize->add_option("--out-dir", opt.out_dir, "Write each maximizer as a point-set file here");

  auto* structure = app.add_subcommand("structure", "Centers, hypercenters and line structure (single-starred)");
  structure->add_option("spec", opt.spec_file, "Spec file")->required();
  structure->add_option("points", opt.points_file, "Point-set file")->required();

  auto* examples = app.add_subcommand("paper-examples", "Reproduce the worked examples from built-in fixtures");
  examples->add_option("--write-dir", opt.write_dir, "Also write the fixture spec files here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const auto started = std::chrono::steady_clock::now();
  Report rep;
  std::string echo;
  for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
  rep.set("command", echo);

  try {
    if (*analyze || *construct || *maximize) record_input(rep, "spec", opt.spec_file);
    if (*count || *structure) {
      record_input(rep, "spec", opt.spec_file);
      record_input(rep, "points", opt.points_file);
    }
    Report& outputs = rep.child("outputs");
    if (*analyze) {
      analyze_into(outputs, load_spec_file(opt.spec_file));
    } else if (*count) {
      const Engine engine = opt.engine == "naive" ? Engine::Naive : opt.engine == "join" ? Engine::Join : Engine::Both;
      count_into(outputs, load_spec_file(opt.spec_file), load_point_set_file(opt.points_file), engine, opt.threads);
    } else if (*construct) {
      const MotifSpec spec = load_spec_file(opt.spec_file);
      outputs.set("kind", opt.kind);
      PointSet set(spec.dimension());
      if (opt.kind == "grid") {
        if (opt.sizes.empty()) throw Error(ErrorCode::InvalidArgument, "--kind grid needs --sizes");
        const GridConstruction g = grid_set(spec, parse_sizes(opt.sizes));
        set = g.set;
        outputs.set("r", num(set.size()));
        outputs.set("guarantee_exponent", to_string(g.exponent));
        if (g.exponent.get_den() == 1) {
          outputs.set("guarantee", to_string(pow(BigInt(std::to_string(set.size())), to_u64(g.exponent.get_num()))));
        }
        if (set.size() <= opt.count_limit) {
          const BigInt c = count_motifs_join(spec, set, opt.threads);
          outputs.set("count", to_string(c));
          outputs.set("equals_r^(L/n)", eq_power(c, BigInt(std::to_string(set.size())), g.exponent));
        }
      } else if (opt.kind == "matching") {
        if (opt.M == 0) throw Error(ErrorCode::InvalidArgument, "--kind matching needs --M >= 1");
        const MatchingConstruction c = matching_construction(spec, opt.M);
        set = c.set;
        outputs.set("M", num(opt.M));
        outputs.set("matching_f", rationals(c.matching.f));
        outputs.set("nu_star", to_string(c.matching.weight));
        outputs.set("d", to_string(c.d));
        outputs.set("L_prime", std::to_string(c.distinct_rows));
        outputs.set("trivial", c.trivial);
        outputs.set("r", num(set.size()));
        outputs.set("guarantee", to_string(c.guarantee));
        if (set.size() <= opt.count_limit) {
          const BigInt n = count_motifs_join(spec, set, opt.threads);
          outputs.set("count", to_string(n));
          outputs.set("guarantee_met", n >= c.guarantee);
          if (n < c.guarantee) throw Error(ErrorCode::InvariantViolation, "matching construction missed its guarantee");
        }
      } else {
        if (opt.r == 0) throw Error(ErrorCode::InvalidArgument, "--kind lines needs --r");
        lines_construction_into(outputs, spec, opt.r, opt.count_limit);
        set = single_starred_construction(spec, opt.r).set;
      }
      if (!opt.output.empty()) {
        save_point_set_file(opt.output, set);
        outputs.set("output", opt.output);
      } else {
        outputs.set("points", points_text(set));
      }
    } else if (*maximize) {
      const MotifSpec spec = load_spec_file(opt.spec_file);
      const auto [side, p] = parse_universe(opt.universe);
      if (p != spec.dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "universe dimension " + std::to_string(p) + " differs from p=" +
                                                      std::to_string(spec.dimension()));
      }
      const PointSet universe = integer_box(side, p);
      const SearchResult res = opt.mode == "exhaustive"
                                   ? exhaustive_maximizer(spec, universe, opt.r, opt.budget, opt.threads)
                                   : local_search_maximizer(spec, universe, opt.r, opt.seed, opt.iters);
      search_into(outputs, spec, res, opt.out_dir);
    } else if (*structure) {
      structure_into(outputs, load_spec_file(opt.spec_file), load_point_set_file(opt.points_file));
    } else if (*examples) {
      if (!opt.write_dir.empty()) {
        fs::create_directories(opt.write_dir);
        std::ofstream(fs::path(opt.write_dir) / "intro.json") << serialize_spec(fixtures::intro_spec()) << "\n";
        std::ofstream(fs::path(opt.write_dir) / "corner.json") << serialize_spec(fixtures::corner_spec()) << "\n";
      }
      paper_examples_into(outputs, opt.threads);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_internal(e.code()) ? kExitInternalError : kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }

  if (opt.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    rep.set("timing_ms", std::to_string(ms.count()));
  }
  out << (opt.format == "structured" ? rep.render_json() : rep.render_text());
  return kExitOk;
}

}  // namespace motif::cli
