#include "commands.hpp"
#include "doctest.h"
#include "dqv/expr.hpp"
#include "dqv/fields.hpp"
#include "dqv/report.hpp"

using namespace dqv;

namespace {

Report sample() {
  Report r;
  r.tool_version = kToolVersion;
  r.config = Json{{"command", "table"}, {"seed", 7}};
  CheckRecord a;
  a.id = "table.row.1";
  a.anchor = "singularity classification table, row 1";
  a.payload = Json{{"table_row", {{"index", 1}, {"count", 5}, {"orbits", "S5+"}, {"params", "C5+"},
                                  {"non_odp", "x"}, {"defect", 0}}},
                   {"value", alg_to_json(parse_alg("-1/5 - 2/5*i", fields::qi()))}};
  CheckRecord b;
  b.id = "x.fail";
  b.anchor = "a failing check";
  b.status = Status::Fail;
  b.payload = Json{{"message", "expected 1, found 2"}};
  CheckRecord c;
  c.id = "x.split";
  c.anchor = "a split check";
  c.status = Status::Split;
  r.add(a);
  r.add(b);
  r.add(c);
  return r;
}

}  // namespace

TEST_CASE("status strings") {
  for (Status s : {Status::Pass, Status::Fail, Status::Split}) CHECK(status_from_string(to_string(s)) == s);
  CHECK_THROWS(status_from_string("maybe"));
}

TEST_CASE("json round trip") {
  Report r = sample();
  Json j = to_json(r);
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["summary"]["split"] == 1);
  Report back = report_from_json(Json::parse(j.dump()));
  CHECK(back == r);
  CHECK(to_json(back).dump() == j.dump());
  CHECK(r.first_failure()->id == "x.fail");
  CHECK(!r.all_pass());
}

TEST_CASE("algebraic numbers serialise exactly") {
  Json a = alg_to_json(parse_alg("-1/5 - 2/5*i", fields::qi()));
  CHECK(a["text"] == "-1/5 - 2/5*i");
  CHECK(a["coeffs"].dump() == R"(["-1/5","-2/5"])");
}

TEST_CASE("markdown gathers table rows") {
  std::string md = to_markdown(sample());
  CHECK(md.find("| 1 |") != std::string::npos);
  CHECK(md.find("x.fail") != std::string::npos);
}

TEST_CASE("row selections") {
  using cli::parse_rows;
  CHECK(parse_rows("all").empty());
  CHECK(parse_rows("11") == std::vector<int>{11});
  CHECK(parse_rows("3,1-2,3") == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(parse_rows("99"), ConfigError);
  CHECK_THROWS_AS(parse_rows("0"), ConfigError);
  CHECK_THROWS_AS(parse_rows("5-2"), ConfigError);
  CHECK_THROWS_AS(parse_rows("x"), ConfigError);
}
