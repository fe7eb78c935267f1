#include <doctest.h>

#include <algorithm>

#include "cplab/harness.hpp"

using namespace cplab;
using namespace cplab::harness;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.rmt.dim = 40;
  cfg.rmt.trials = 4;
  return cfg;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("the registry is stable and complete") {
  auto names = list_checks();
  CHECK(names.size() == 21);
  CHECK(contains(names, "kappa-sigma"));
  CHECK(contains(names, "beta-mu-cube-dual"));
  CHECK(contains(names, "rmt-semicircle"));
  CHECK(names.front() == "theta-cube-inner");
  CHECK(names == list_checks());
}

TEST_CASE("unknown names are rejected at load") {
  SuiteConfig cfg = small_config();
  CHECK_THROWS_AS(run_check("no-such-check", cfg), std::invalid_argument);
  cfg.only = {"kappa-sigma", "typo"};
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("single checks report measured scalars") {
  SuiteConfig cfg = small_config();
  CheckResult r = run_check("theta-obstruction", cfg);
  CHECK(r.passed);
  CHECK(r.measured == "eps^-1");
  CHECK(r.kind == "exact-symbolic");

  CheckResult k = run_check("kappa-sigma", cfg);
  CHECK(k.passed);
  CHECK(k.measured.rfind("delta", 0) == 0);

  CheckResult w = run_check("w-cube-root", cfg);
  CHECK(w.passed);
  CHECK(w.details.find("selected candidate: conjugate") != std::string::npos);

  CheckResult p = run_check("parameter-arithmetic", cfg);
  CHECK(p.passed);
  CHECK(p.measured == "11/3 and 35/27");
}

TEST_CASE("candidate-forced adU0-on-v still verifies the derivation") {
  SuiteConfig cfg = small_config();
  for (const char* wc : {"auto", "paper", "conjugate"}) {
    cfg.w_candidate = wc;
    CheckResult r = run_check("adU0-on-v", cfg);
    INFO(wc);
    CHECK(r.passed);
  }
}

TEST_CASE("exact suite passes with the default config") {
  SuiteConfig cfg = small_config();
  cfg.only = {"theta-cube-inner", "theta-obstruction", "relative-commutant-probe",
              "w-cube-root",      "gamma-fixes-W",     "adU0-on-v",
              "adU0-on-Ei",       "theta-A-kernel",    "beta-xn",
              "beta-un",          "adxn-locality",     "kappa-sigma",
              "beta-mu-cube-dual", "gamma-decomposition", "parameter-arithmetic",
              "moment-oracle"};
  SuiteReport rep = run_suite(cfg);
  CHECK(rep.failed == 0);
  CHECK(rep.total == 16);
}

TEST_CASE("rmt checks pass at reduced size") {
  SuiteConfig cfg = small_config();
  cfg.only = {"rmt-relations", "rmt-v-trace-zero", "rmt-compression"};
  SuiteReport rep = run_suite(cfg);
  for (const auto& c : rep.checks) {
    INFO(c.name << ": " << c.measured);
    CHECK(c.passed);
  }
}

TEST_CASE("json reports are stable and renderable") {
  SuiteConfig cfg = small_config();
  cfg.only = {"theta-obstruction", "parameter-arithmetic"};
  SuiteReport rep1 = run_suite(cfg);
  SuiteReport rep2 = run_suite(cfg);
  std::string j1 = report_to_json(rep1);
  std::string j2 = report_to_json(rep2);
  CHECK(j1 == j2);
  CHECK(j1.find("\"schema_version\": 1") != std::string::npos);
  CHECK(j1.find("\"master_seed\"") != std::string::npos);
  CHECK(j1.find("\"summary\"") != std::string::npos);

  std::string text = render_report_text(j1);
  CHECK(text.find("[PASS] theta-obstruction") != std::string::npos);
  CHECK(text.find("summary: 2/2 passed") != std::string::npos);
}

TEST_CASE("failures surface as results, not crashes") {
  SuiteConfig cfg = small_config();
  cfg.rmt.tol_exact = 1e-30;  // impossible tolerance
  CheckResult r = run_check("rmt-relations", cfg);
  CHECK_FALSE(r.passed);
  CHECK(!r.measured.empty());
}
