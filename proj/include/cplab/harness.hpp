#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cplab/rmt.hpp"

namespace cplab::harness {

struct CheckResult {
  std::string name;
  std::string kind;  // exact-symbolic | exact-matrix | statistical | arithmetic
  bool passed = false;
  std::string measured;
  std::string expected;
  std::string tolerance;
  std::string details;
};

struct SuiteConfig {
  std::vector<std::string> only;     // empty = run everything
  rmt::RmtConfig rmt;
  std::string w_candidate = "auto";  // auto | paper | conjugate
  std::string json_out;              // write the JSON report here if nonempty
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> checks;
  int total = 0;
  int passed = 0;
  int failed = 0;
};

/// Names of the registered checks, in their stable run order.
std::vector<std::string> list_checks();

/// Runs one check. Unknown names throw std::invalid_argument; anything going
/// wrong inside a check (window overflow included) is reported as a failed
/// result, never as a crash.
CheckResult run_check(const std::string& name, const SuiteConfig& config);

SuiteReport run_suite(const SuiteConfig& config);

/// Stable-key-order JSON rendering of a report.
std::string report_to_json(const SuiteReport& report);

/// Human-readable rendering of a JSON report (the `report` subcommand).
std::string render_report_text(const std::string& json_text);

}  // namespace cplab::harness
