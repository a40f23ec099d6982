#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "robin/config.hpp"

namespace robin {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::uint64_t undecided_count = 0;  // any nonzero value fails the run
};

struct Report {
  std::string version;
  RunConfig config;
  std::vector<CheckResult> checks;
  bool overall = false;
};

const char* tool_version();

// Named verification suites: jk2, jk3, jk14, massias, odd, squarefree,
// squarefull, primorial, omega4, lemmaAF, mp, counterexample.
const std::vector<std::string>& suite_names();
bool is_suite_name(std::string_view name);

CheckResult run_suite(std::string_view name, const RunConfig& config);

// Runs every named suite and aggregates.
Report run_all_suites(const RunConfig& config);

}  // namespace robin
