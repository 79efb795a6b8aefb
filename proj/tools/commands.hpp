#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dqv/report.hpp"

namespace dqv::cli {

struct Config {
  std::string command;
  std::vector<int> rows;  // empty = all
  int samples = 3;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string data_dir;
  int jobs = 0;  // not echoed: output must not depend on it
  std::string lambda, alpha, theta;
};

// "all", "11", "1,3,7-9". Throws ConfigError outside 1..26.
std::vector<int> parse_rows(const std::string& text);

Report run(const Config& cfg);
std::string render(const Report& r, const std::string& format);
// 0 all pass, 1 some check failed.
int exit_code(const Report& r);

}  // namespace dqv::cli
