#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include "dqv/chartable.hpp"
#include "dqv/classify.hpp"
#include "dqv/errors.hpp"
#include "dqv/expr.hpp"
#include "dqv/fields.hpp"

namespace dqv::cli {

namespace {

constexpr int kRows = 26;

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad row '" + s + "'");
  }
  if (used != s.size()) throw ConfigError("bad row '" + s + "'");
  return v;
}

// Smallest bundled field the expression parses in.
Alg parse_number(const std::string& text) {
  for (const TowerPtr& t : {fields::q(), fields::qi(), fields::qi_s6(), fields::qi_s2_s3(), fields::qi_s95(),
                            fields::qi_s15(), fields::qi_s5()}) {
    try {
      return parse_alg(text, t);
    } catch (const ParseError&) {
    }
  }
  throw ConfigError("cannot parse '" + text + "' (generators: i, s2, s3, s5, s6, s15, s95)");
}

Rational parse_q(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw ConfigError(std::string(what) + " must be rational: " + e.what());
  }
}

Json echo(const Config& c) {
  Json rows = c.rows.empty() ? Json("all") : Json(c.rows);
  Json j{{"command", c.command}, {"rows", rows}, {"samples", c.samples}, {"seed", c.seed}, {"format", c.format}};
  if (!c.lambda.empty()) j["lambda"] = c.lambda;
  if (!c.alpha.empty()) j["alpha"] = c.alpha;
  if (!c.theta.empty()) j["theta"] = c.theta;
  return j;
}

}  // namespace

std::vector<int> parse_rows(const std::string& text) {
  if (text.empty() || text == "all") return {};
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dash = part.find('-', 1);
    int lo = 0, hi = 0;
    if (dash == std::string::npos) {
      lo = hi = parse_int(part);
    } else {
      lo = parse_int(part.substr(0, dash));
      hi = parse_int(part.substr(dash + 1));
    }
    if (lo < 1 || hi > kRows || lo > hi)
      throw ConfigError("row selection '" + part + "' outside 1.." + std::to_string(kRows));
    for (int r = lo; r <= hi; ++r) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Report run(const Config& cfg) {
  if (cfg.samples < 1) throw ConfigError("--samples must be positive");
  if (cfg.format != "json" && cfg.format != "markdown") throw ConfigError("unknown format " + cfg.format);
  RunOptions opt;
  opt.rows = cfg.rows;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.threads = cfg.jobs;
  opt.data_dir = cfg.data_dir.empty() ? default_data_dir() : cfg.data_dir;

  Report rep;
  const std::string& c = cfg.command;
  if (c == "table") {
    rep = table1(opt);
  } else if (c == "invariants") {
    rep = invariants_check(opt.data_dir);
  } else if (c == "ledger") {
    rep = constant_ledger_check();
  } else if (c == "pencils") {
    rep = pencil_geometry_check();
  } else if (c == "artin-mumford") {
    if (!cfg.lambda.empty() && !cfg.alpha.empty()) throw ConfigError("give at most one of --lambda, --alpha");
    if (!cfg.lambda.empty())
      rep = artin_mumford_sing_check(Alg(parse_q(cfg.lambda, "--lambda")), opt.threads);
    else if (!cfg.alpha.empty())
      rep = artin_mumford_alpha_check(parse_number(cfg.alpha), opt.threads);
    else
      rep = artin_mumford_suite(opt);
  } else if (c == "irr") {
    rep = a6_identification(opt.data_dir);
  } else if (c == "theta") {
    if (cfg.theta.empty()) {
      for (long t : {1L, 2L, -3L}) rep.append(theta_family_check(Rational(t)));
    } else {
      rep = theta_family_check(parse_q(cfg.theta, "--theta"));
    }
  } else if (c == "verify-all") {
    rep = verify_all(opt);
  } else {
    throw ConfigError("unknown command " + c);
  }
  rep.tool_version = kToolVersion;
  rep.config = echo(cfg);
  return rep;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "markdown") return to_markdown(r);
  return to_json(r).dump(2) + "\n";
}

int exit_code(const Report& r) { return r.all_pass() ? 0 : 1; }

}  // namespace dqv::cli
