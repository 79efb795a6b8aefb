// dqverify: exact verification of the double quadric singularity classification.
//
// Exit codes: 0 every check passed, 1 a mathematical mismatch, 2 a configuration
// or data error.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "dqv/errors.hpp"

namespace {

bool config_kind(const std::string& k) {
  return k == "ConfigError" || k == "DataFileMissing" || k == "ChecksumMismatch" || k == "DataFormatError" ||
         k == "ParseError";
}

}  // namespace

int main(int argc, char** argv) {
  using dqv::cli::Config;
  Config cfg;
  std::string rows = "all";

  CLI::App app{"Exact checks for singular S5-invariant double quadrics"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the command; set before subcommands are added
  app.set_version_flag("--version", std::string(dqv::kToolVersion));
  app.add_option("--format", cfg.format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled parameters")->capture_default_str();
  app.add_option("--rows", rows, "table rows: all, N, or a list like 1,3,7-9")->capture_default_str();
  app.add_option("--samples", cfg.samples, "rational samples per one-parameter row")->capture_default_str();
  app.add_option("--data-dir", cfg.data_dir, "character-table directory (default $DQV_DATA_DIR)");
  app.add_option("--jobs", cfg.jobs, "OpenMP threads, 0 = runtime default")->capture_default_str();

  auto* am = app.add_subcommand("artin-mumford", "determinantal quartic sections");
  am->add_option("--lambda", cfg.lambda, "rational lambda");
  am->add_option("--alpha", cfg.alpha, "alpha, e.g. (-1+s6)/5");
  auto* th = app.add_subcommand("theta", "the theta family of S6-invariant threefolds");
  th->add_option("--theta", cfg.theta, "nonzero rational theta (default: 1, 2, -3)");
  app.add_subcommand("table", "classification table rows");
  app.add_subcommand("invariants", "invariant dimensions from character tables");
  app.add_subcommand("ledger", "constants attached to the non-ODP parameters");
  app.add_subcommand("pencils", "lines, curves and their intersections in the parameter plane");
  app.add_subcommand("irr", "the A6-invariant surface");
  app.add_subcommand("verify-all", "every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    cfg.rows = dqv::cli::parse_rows(rows);
    dqv::Report rep = dqv::cli::run(cfg);
    std::cout << dqv::cli::render(rep, cfg.format);
    int rc = dqv::cli::exit_code(rep);
    if (rc != 0) {
      const auto* f = rep.first_failure();
      std::cerr << "FAIL " << rep.count(dqv::Status::Fail) << " of " << rep.records.size() << " checks; first: "
                << f->id;
      if (f->payload.contains("message")) std::cerr << " (" << f->payload["message"].get<std::string>() << ")";
      std::cerr << "\n";
    }
    return rc;
  } catch (const dqv::Error& e) {
    std::cerr << e.what() << "\n";
    return config_kind(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
