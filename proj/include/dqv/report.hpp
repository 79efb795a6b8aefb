#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dqv/tower.hpp"

namespace dqv {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Split };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckRecord {
  std::string id;      // e.g. "table.row.11"
  std::string anchor;  // what the check verifies, in words
  Status status = Status::Pass;
  Json payload = Json::object();

  friend bool operator==(const CheckRecord& a, const CheckRecord& b) {
    return a.id == b.id && a.anchor == b.anchor && a.status == b.status && a.payload == b.payload;
  }
};

struct Report {
  std::string tool_version;
  Json config = Json::object();
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const Report& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }
  int count(Status s) const;
  bool all_pass() const { return count(Status::Fail) == 0; }
  const CheckRecord* first_failure() const;

  friend bool operator==(const Report& a, const Report& b) {
    return a.tool_version == b.tool_version && a.config == b.config && a.records == b.records;
  }
};

inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const Report& r);
Report report_from_json(const Json& j);
// Markdown: one section per record; records carrying a "table_row" payload are
// gathered into a five-column table.
std::string to_markdown(const Report& r);

// {"tower": ..., "coeffs": nested lists of "p/q" strings, "text": ...}. Only
// "tower" and "coeffs" are meant for machines.
Json alg_to_json(const Alg& x);

}  // namespace dqv
