#pragma once

#include <deque>
#include <list>
#include <string>
#include <vector>

namespace motif {

/// Ordered key/value tree used for command output. Keys keep insertion order so renders
/// are byte-stable; all numbers are expected to arrive already formatted as exact strings.
class Report {
 public:
  Report& set(const std::string& key, std::string value);
  Report& set(const std::string& key, std::vector<std::string> values);
  Report& set(const std::string& key, const char* value) { return set(key, std::string(value)); }
  Report& set(const std::string& key, bool value);
  /// Nested object under `key`, created on first use.
  Report& child(const std::string& key);
  /// Appends a new object to the list under `key`.
  Report& append(const std::string& key);

  /// Indented "key: value" lines.
  std::string render_text() const;
  /// JSON with the same key order; scalars are strings or booleans.
  std::string render_json() const;

 private:
  struct Entry;
  void render_text(std::string& out, int indent) const;
  Entry& entry(const std::string& key);

  std::list<Entry> entries_;  // node-based: references from child()/append() stay valid
};

struct Report::Entry {
  enum class Kind { Scalar, Flag, List, Object, ObjectList };
  std::string key;
  Kind kind = Kind::Scalar;
  std::string scalar;
  bool flag = false;
  std::vector<std::string> list;
  std::deque<Report> objects;
};

}  // namespace motif
