#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "motif/pointset.hpp"
#include "motif/report.hpp"
#include "motif/spec.hpp"

namespace motif::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

enum class Engine { Naive, Join, Both };

/// Report bodies, independent of files and flags so tests can call them directly.
void analyze_into(Report& out, const MotifSpec& spec);
void count_into(Report& out, const MotifSpec& spec, const PointSet& set, Engine engine, unsigned threads);
void structure_into(Report& out, const MotifSpec& spec, const PointSet& set);

/// Runs the command line. Reports go to `out`, diagnostics to `err`; returns the exit code
/// (0 success, 2 input error, 3 internal invariant violation).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motif::cli
