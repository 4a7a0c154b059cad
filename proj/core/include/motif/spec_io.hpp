#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "motif/spec.hpp"

namespace motif {

/// Spec files are JSON objects with exactly the keys "L", "p", "partitions" and
/// (optionally) "constants":
///
///   {"L": 2, "p": 2,
///    "partitions": [[[1]], [[1, 2]]],
///    "constants": [{"row": 2, "col": 1, "value": "5"}]}
///
/// `partitions` holds one list of blocks per coordinate, rows 1-based. A constant value is
/// an integer literal or a string "a", "-a" or "a/b". Unknown keys are rejected.
/// Parse errors carry the byte offset; validation errors name the offending path.
RawSpec parse_raw_spec(std::string_view text);
MotifSpec parse_spec(std::string_view text);
MotifSpec load_spec_file(const std::filesystem::path& path);

/// Canonical single-line form. parse_spec(serialize_spec(s)) == s.
std::string serialize_spec(const MotifSpec& spec);

}  // namespace motif
