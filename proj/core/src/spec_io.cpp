#include "motif/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "motif/error.hpp"

namespace motif {

namespace {

using nlohmann::json;

std::int64_t require_int(const json& node, const std::string& where) {
  if (!node.is_number_integer()) throw Error(ErrorCode::Parse, where + ": expected an integer");
  return node.get<std::int64_t>();
}

const json& require_array(const json& node, const std::string& where) {
  if (!node.is_array()) throw Error(ErrorCode::Parse, where + ": expected an array");
  return node;
}

Rational constant_value(const json& node, const std::string& where) {
  if (node.is_number_integer()) return Rational(BigInt(std::to_string(node.get<std::int64_t>())));
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, where + ": " + e.detail());
    }
  }
  throw Error(ErrorCode::Parse, where + ": expected an integer or a rational string");
}

}  // namespace

RawSpec parse_raw_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "spec must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "L" && key != "p" && key != "partitions" && key != "constants") {
      throw Error(ErrorCode::Parse, "unknown key '" + key + "'");
    }
  }
  for (const char* key : {"L", "p", "partitions"}) {
    if (!doc.contains(key)) throw Error(ErrorCode::Parse, std::string("missing key '") + key + "'");
  }

  RawSpec raw;
  raw.L = require_int(doc["L"], "L");
  raw.p = require_int(doc["p"], "p");
  const json& parts = require_array(doc["partitions"], "partitions");
  for (std::size_t m = 0; m < parts.size(); ++m) {
    const std::string pw = "partitions[" + std::to_string(m) + "]";
    std::vector<std::vector<std::int64_t>> blocks;
    for (std::size_t b = 0; b < require_array(parts[m], pw).size(); ++b) {
      const std::string bw = pw + "[" + std::to_string(b) + "]";
      std::vector<std::int64_t> rows;
      const json& block = require_array(parts[m][b], bw);
      for (std::size_t k = 0; k < block.size(); ++k) {
        rows.push_back(require_int(block[k], bw + "[" + std::to_string(k) + "]"));
      }
      blocks.push_back(std::move(rows));
    }
    raw.partitions.push_back(std::move(blocks));
  }
  if (doc.contains("constants")) {
    const json& consts = require_array(doc["constants"], "constants");
    for (std::size_t k = 0; k < consts.size(); ++k) {
      const std::string cw = "constants[" + std::to_string(k) + "]";
      const json& c = consts[k];
      if (!c.is_object()) throw Error(ErrorCode::Parse, cw + ": expected an object");
      for (const auto& [key, _] : c.items()) {
        if (key != "row" && key != "col" && key != "value") {
          throw Error(ErrorCode::Parse, cw + ": unknown key '" + key + "'");
        }
      }
      if (!c.contains("row") || !c.contains("col") || !c.contains("value")) {
        throw Error(ErrorCode::Parse, cw + ": needs row, col and value");
      }
      raw.constants.push_back(
          {require_int(c["row"], cw + ".row"), require_int(c["col"], cw + ".col"), constant_value(c["value"], cw + ".value")});
    }
  }
  return raw;
}

MotifSpec parse_spec(std::string_view text) { return validate_spec(parse_raw_spec(text)); }

MotifSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

std::string serialize_spec(const MotifSpec& spec) {
  const RawSpec raw = to_raw(spec);
  nlohmann::ordered_json doc;
  doc["L"] = raw.L;
  doc["p"] = raw.p;
  doc["partitions"] = raw.partitions;
  auto consts = nlohmann::ordered_json::array();
  for (const auto& c : raw.constants) {
    nlohmann::ordered_json entry;
    entry["row"] = c.row;
    entry["col"] = c.col;
    entry["value"] = to_string(c.value);
    consts.push_back(std::move(entry));
  }
  doc["constants"] = std::move(consts);
  return doc.dump();
}

}  // namespace motif
