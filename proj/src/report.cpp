#include "dqv/report.hpp"

#include <sstream>

namespace dqv {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Split: return "split";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "split") return Status::Split;
  throw ParseError("unknown status '" + s + "'");
}

int Report::count(Status s) const {
  int n = 0;
  for (const auto& r : records) n += r.status == s;
  return n;
}

const CheckRecord* Report::first_failure() const {
  for (const auto& r : records)
    if (r.status == Status::Fail) return &r;
  return nullptr;
}

namespace {

Json nested(const Alg& x) {
  if (x.tower()->depth() == 0) return to_string(x.rational());
  Json out = Json::array();
  for (const auto& c : x.top_coefficients()) out.push_back(nested(c));
  return out;
}

}  // namespace

Json alg_to_json(const Alg& x) {
  return Json{{"tower", x.tower()->describe()}, {"coeffs", nested(x)}, {"text", x.str()}};
}

Json to_json(const Report& r) {
  Json recs = Json::array();
  for (const auto& c : r.records)
    recs.push_back(Json{{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"payload", c.payload}});
  return Json{{"tool_version", r.tool_version},
              {"config", r.config},
              {"records", recs},
              {"summary",
               {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"split", r.count(Status::Split)}}}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.tool_version = j.at("tool_version").get<std::string>();
  r.config = j.at("config");
  for (const auto& c : j.at("records")) {
    CheckRecord rec;
    rec.id = c.at("id").get<std::string>();
    rec.anchor = c.at("anchor").get<std::string>();
    rec.status = status_from_string(c.at("status").get<std::string>());
    rec.payload = c.at("payload");
    r.records.push_back(std::move(rec));
  }
  return r;
}

std::string to_markdown(const Report& r) {
  std::ostringstream os;
  os << "# dqverify report\n\n";
  os << "version " << r.tool_version << ", " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail)
     << " fail, " << r.count(Status::Split) << " split\n\n";
  bool table = false;
  for (const auto& c : r.records) {
    if (!c.payload.contains("table_row")) continue;
    if (!table) {
      os << "| row | \\|Sing\\| | Sing | (mu, nu) | non-ODP (mu, nu) | defect | status |\n";
      os << "|-----|--------|------|----------|------------------|--------|--------|\n";
      table = true;
    }
    const Json& t = c.payload["table_row"];
    os << "| " << t.value("index", 0) << " | " << t.value("count", 0) << " | " << t.value("orbits", "") << " | "
       << t.value("params", "") << " | " << t.value("non_odp", "") << " | " << t.value("defect", 0) << " | " << to_string(c.status) << " |\n";
  }
  if (table) os << "\n";
  for (const auto& c : r.records) {
    os << "## " << c.id << " (" << to_string(c.status) << ")\n\n" << c.anchor << "\n\n";
    if (c.status != Status::Pass && c.payload.contains("message"))
      os << "- " << c.payload["message"].get<std::string>() << "\n\n";
  }
  return os.str();
}

}  // namespace dqv
