// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cplab/freemoments.hpp"
#include "cplab/harness.hpp"
#include "cplab/parser.hpp"
#include "cplab/presalg.hpp"
#include "cplab/rmt.hpp"
#include "oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double x) { return cplab::rmt::format_float(x); }

// ---------------------------------------------------------------------------

void criterion_1_exact_suite() {
  auto t0 = Clock::now();
  cplab::harness::SuiteConfig cfg;
  cfg.only = {"theta-cube-inner", "theta-obstruction", "adU0-on-v",
              "adU0-on-Ei",       "theta-A-kernel",    "beta-xn",
              "beta-un",          "adxn-locality",     "kappa-sigma",
              "beta-mu-cube-dual", "gamma-fixes-W",    "gamma-decomposition",
              "relative-commutant-probe"};
  cplab::harness::SuiteReport rep = cplab::harness::run_suite(cfg);
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "exact symbolic suite " << rep.passed << "/" << rep.total << " in " << fmt(dt)
     << " s (< 10 s)";
  bool ok = rep.failed == 0 && dt < 10.0;
  for (const auto& c : rep.checks)
    if (!c.passed) os << "; FAILED " << c.name << ": " << c.measured;
  report(1, ok, os.str());
}

void criterion_2_kappa_sigma() {
  const cplab::Algebra& A = cplab::Algebra::standard();
  cplab::Substitution ph = A.phi();
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    cplab::Element u_n = A.make_un(n);
    if (!(adjoint(u_n) * apply(ph, u_n) == A.one() * cplab::CycloNum::delta())) ok = false;
  }
  report(2, ok, "u_n* phi(u_n) = delta exactly for n = 1..6 (no tolerance)");
}

void criterion_3_w_cube_root() {
  cplab::harness::SuiteConfig cfg;
  cplab::harness::CheckResult r = cplab::harness::run_check("w-cube-root", cfg);
  report(3, r.passed, "w-cube-root: " + r.measured + "(" + r.details + ")");
}

void criterion_4_moment_engine() {
  auto t0 = Clock::now();
  bool catalan_ok = true;
  for (int n = 0; n <= 6; ++n) {
    cplab::FreeWord w;
    for (int i = 0; i < 2 * n; ++i) w.letters.push_back(cplab::L1::X1);
    if (cplab::mixed_moment_rational(w, nullptr) !=
        cplab::Rational(static_cast<long>(cplab::oracles::catalan(n))))
      catalan_ok = false;
  }

  cplab::MomentCache cache;
  bool oracle_ok = true;
  long words = 0;
  for (int len = 0; len <= 8 && oracle_ok; ++len) {
    long total = 1;
    for (int i = 0; i < len; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
      cplab::FreeWord w;
      long c = code;
      for (int i = 0; i < len; ++i) {
        int d = static_cast<int>(c % 3);
        c /= 3;
        w.letters.push_back(d == 0 ? cplab::L1::X1 : (d == 1 ? cplab::L1::X2 : cplab::L1::u));
      }
      if (cplab::mixed_moment_rational(w, &cache) != cplab::oracles::pairing_face_moment(w)) {
        oracle_ok = false;
        break;
      }
      ++words;
    }
  }

  std::mt19937_64 rng(20240);
  bool tracial_ok = true;
  for (int it = 0; it < 1000; ++it) {
    cplab::FreeWord w;
    int len = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) w.letters.push_back(static_cast<cplab::L1>(rng() % 5));
    cplab::FreeWord r;
    size_t by = rng() % w.letters.size();
    for (size_t i = 0; i < w.letters.size(); ++i)
      r.letters.push_back(w.letters[(i + by) % w.letters.size()]);
    if (cplab::mixed_moment_rational(w, &cache) != cplab::mixed_moment_rational(r, &cache))
      tracial_ok = false;
  }

  std::ostringstream os;
  os << "moment engine: Catalan n<=6 " << (catalan_ok ? "ok" : "FAIL") << ", exhaustive "
     << words << " words vs pairing oracle " << (oracle_ok ? "ok" : "FAIL")
     << ", traciality x1000 " << (tracial_ok ? "ok" : "FAIL") << " in "
     << fmt(seconds_since(t0)) << " s";
  report(4, catalan_ok && oracle_ok && tracial_ok, os.str());
}

void criterion_5_parameters() {
  cplab::Rational t1 = cplab::Rational(3) + (cplab::Rational(1) - cplab::rational(1, 3));
  cplab::Rational t2 = cplab::Rational(1) + (t1 - 1) / cplab::Rational(9);
  bool ok = t1 == cplab::rational(11, 3) && t2 == cplab::rational(35, 27);
  report(5, ok, "parameter arithmetic: 3 + (1 - 1/3) = " + cplab::to_string(t1) +
                    ", 1 + (11/3 - 1)/3^2 = " + cplab::to_string(t2));
}

void criterion_6_relations() {
  auto t0 = Clock::now();
  cplab::harness::SuiteConfig cfg;  // defaults: dim 300, default seed
  cplab::harness::CheckResult rel = cplab::harness::run_check("rmt-relations", cfg);
  cplab::harness::CheckResult vtr = cplab::harness::run_check("rmt-v-trace-zero", cfg);
  double dt = seconds_since(t0);
  bool ok = rel.passed && vtr.passed && dt < 60.0;
  std::ostringstream os;
  os << "rmt relations at N=300: " << rel.measured << "; v-words: " << vtr.measured
     << "; " << fmt(dt) << " s (< 60 s)";
  report(6, ok, os.str());
}

void criterion_7_mc_vs_exact() {
  auto t0 = Clock::now();
  cplab::harness::SuiteConfig cfg;  // dim 300, trials 20, default seed
  cplab::harness::CheckResult r = cplab::harness::run_check("rmt-vs-exact", cfg);
  std::ostringstream os;
  os << "mc vs exact (N=300, 20 trials): " << (r.passed ? "all probes within tolerance"
                                                        : r.measured)
     << " in " << fmt(seconds_since(t0)) << " s";
  report(7, r.passed, os.str());
}

void criterion_8_semicircle() {
  auto t0 = Clock::now();
  cplab::harness::SuiteConfig cfg;
  cfg.rmt.dim = 400;
  cplab::harness::CheckResult r = cplab::harness::run_check("rmt-semicircle", cfg);
  double dt = seconds_since(t0);
  bool ok = r.passed && dt < 120.0;
  report(8, ok, "semicircle at N=400: " + r.measured + " in " + fmt(dt) + " s (< 120 s)");
}

void criterion_9_compression() {
  cplab::harness::SuiteConfig cfg;
  cplab::harness::CheckResult r = cplab::harness::run_check("rmt-compression", cfg);
  report(9, r.passed, "compression: " + r.measured);
}

void criterion_10_reproducibility() {
  cplab::harness::SuiteConfig cfg;
  cfg.rmt.dim = 120;
  cfg.rmt.trials = 4;
  cfg.only = {"theta-obstruction", "kappa-sigma", "rmt-relations"};
  std::string j1 = cplab::harness::report_to_json(cplab::harness::run_suite(cfg));
  std::string j2 = cplab::harness::report_to_json(cplab::harness::run_suite(cfg));

  cplab::rmt::RmtConfig rc;
  rc.dim = 120;
  cplab::rmt::Model m1 = cplab::rmt::build_generators(rc, 0, cplab::WCandidate::conjugate);
  cplab::rmt::Model m2 = cplab::rmt::build_generators(rc, 0, cplab::WCandidate::conjugate);
  auto e1 = cplab::rmt::spectrum(m1.X1, rc.tol_exact);
  auto e2 = cplab::rmt::spectrum(m2.X1, rc.tol_exact);
  std::ostringstream h1, h2, s1, s2;
  cplab::rmt::write_histogram_csv(h1, e1, rc.bins);
  cplab::rmt::write_histogram_csv(h2, e2, rc.bins);
  cplab::rmt::write_spectrum_csv(s1, e1);
  cplab::rmt::write_spectrum_csv(s2, e2);

  bool ok = j1 == j2 && h1.str() == h2.str() && s1.str() == s2.str();
  report(10, ok, "byte-identical JSON and CSV outputs across repeated runs");
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion_1_exact_suite();
  criterion_2_kappa_sigma();
  criterion_3_w_cube_root();
  criterion_4_moment_engine();
  criterion_5_parameters();
  criterion_6_relations();
  criterion_7_mc_vs_exact();
  criterion_8_semicircle();
  criterion_9_compression();
  criterion_10_reproducibility();
  std::printf("%s: %d/10 criteria passed in %s s\n", failures == 0 ? "OK" : "FAILED",
              10 - failures, fmt(seconds_since(t0)).c_str());
  return failures == 0 ? 0 : 1;
}
