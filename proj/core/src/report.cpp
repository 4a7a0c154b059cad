#include "motif/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace motif {

Report::Entry& Report::entry(const std::string& key) {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.key == key; });
  if (it != entries_.end()) return *it;
  Entry& e = entries_.emplace_back();
  e.key = key;
  return e;
}

Report& Report::set(const std::string& key, std::string value) {
  Entry& e = entry(key);
  e.kind = Entry::Kind::Scalar;
  e.scalar = std::move(value);
  return *this;
}

Report& Report::set(const std::string& key, std::vector<std::string> values) {
  Entry& e = entry(key);
  e.kind = Entry::Kind::List;
  e.list = std::move(values);
  return *this;
}

Report& Report::set(const std::string& key, bool value) {
  Entry& e = entry(key);
  e.kind = Entry::Kind::Flag;
  e.flag = value;
  return *this;
}

Report& Report::child(const std::string& key) {
  Entry& e = entry(key);
  if (e.kind != Entry::Kind::Object || e.objects.empty()) {
    e.kind = Entry::Kind::Object;
    e.objects.assign(1, Report{});
  }
  return e.objects.front();
}

Report& Report::append(const std::string& key) {
  Entry& e = entry(key);
  if (e.kind != Entry::Kind::ObjectList) {
    e.kind = Entry::Kind::ObjectList;
    e.objects.clear();
  }
  e.objects.emplace_back();
  return e.objects.back();
}

void Report::render_text(std::string& out, int indent) const {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& e : entries_) {
    switch (e.kind) {
      case Entry::Kind::Scalar:
        out += pad + e.key + ": " + e.scalar + "\n";
        break;
      case Entry::Kind::Flag:
        out += pad + e.key + ": " + (e.flag ? "true" : "false") + "\n";
        break;
      case Entry::Kind::List: {
        out += pad + e.key + ": [";
        for (std::size_t i = 0; i < e.list.size(); ++i) out += (i ? ", " : "") + e.list[i];
        out += "]\n";
        break;
      }
      case Entry::Kind::Object:
        out += pad + e.key + ":\n";
        e.objects.front().render_text(out, indent + 2);
        break;
      case Entry::Kind::ObjectList:
        out += pad + e.key + ": (" + std::to_string(e.objects.size()) + ")\n";
        for (std::size_t i = 0; i < e.objects.size(); ++i) {
          out += pad + "  [" + std::to_string(i + 1) + "]\n";
          e.objects[i].render_text(out, indent + 4);
        }
        break;
    }
  }
}

std::string Report::render_text() const {
  std::string out;
  render_text(out, 0);
  return out;
}

std::string Report::render_json() const {
  struct Walker {
    static nlohmann::ordered_json walk(const std::list<Entry>& entries) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (const auto& e : entries) {
        switch (e.kind) {
          case Entry::Kind::Scalar: obj[e.key] = e.scalar; break;
          case Entry::Kind::Flag: obj[e.key] = e.flag; break;
          case Entry::Kind::List: obj[e.key] = e.list; break;
          case Entry::Kind::Object: obj[e.key] = walk(e.objects.front().entries_); break;
          case Entry::Kind::ObjectList: {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& o : e.objects) arr.push_back(walk(o.entries_));
            obj[e.key] = std::move(arr);
            break;
          }
        }
      }
      return obj;
    }
  };
  return Walker::walk(entries_).dump(2) + "\n";
}

}  // namespace motif
