#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cplab/harness.hpp"
#include "cplab/parser.hpp"
#include "cplab/presalg.hpp"
#include "cplab/rmt.hpp"

namespace {

using cplab::Algebra;
using cplab::CycloNum;
using cplab::Element;
using cplab::WCandidate;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

WCandidate candidate_from_string(const std::string& s) {
  if (s == "paper") return WCandidate::paper;
  if (s == "conjugate") return WCandidate::conjugate;
  return WCandidate::conjugate;  // "auto": the candidate whose action cubes to id
}

const Algebra& algebra_for_cli(const std::string& wc) {
  static const Algebra paper(8, WCandidate::paper);
  static const Algebra conj(8, WCandidate::conjugate);
  // The DSL default follows the paper coefficient convention so that plain
  // `parse` output matches the pinned check formulas.
  if (wc == "conjugate") return conj;
  return paper;
}

// Minimal key=value config file: one `key = value` per line, '#' comments.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      return s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

void print_parse_error(const std::string& word, const cplab::parse_error& e) {
  std::cerr << "parse error at column " << e.column() << ": " << e.what() << "\n";
  std::cerr << "  " << word << "\n";
  std::cerr << "  " << std::string(static_cast<size_t>(e.column() > 0 ? e.column() - 1 : 0), ' ')
            << "^\n";
}

// Whitespace-separated model generator names with optional ^int and adjoint
// suffix; used by the Monte Carlo path, which only knows the model operators.
std::vector<std::string> mc_word_from_text(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) {
    bool star = false;
    if (!tok.empty() && (tok.back() == '\'' || tok.back() == '*')) {
      star = true;
      tok.pop_back();
    }
    int pow = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      pow = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
      if (pow < 0) throw std::runtime_error("negative powers not supported with --mc");
    }
    if (tok != "X1" && tok != "X2" && tok != "X3" && tok != "u" && tok != "g" &&
        tok != "v" && tok != "W")
      throw std::runtime_error("generator '" + tok +
                               "' is not a model operator (use X1..X3, u, g, v, W)");
    for (int i = 0; i < pow; ++i) out.push_back(star ? tok + "'" : tok);
  }
  if (out.empty()) throw std::runtime_error("empty word");
  return out;
}

int cmd_check(const cplab::harness::SuiteConfig& config, bool list_only) {
  if (list_only) {
    for (const std::string& name : cplab::harness::list_checks()) std::cout << name << "\n";
    return kExitOk;
  }
  cplab::harness::SuiteReport report = cplab::harness::run_suite(config);
  for (const auto& c : report.checks) {
    std::cout << "[" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << " — "
              << c.measured << "\n";
  }
  std::cout << "summary: " << report.passed << "/" << report.total << " passed\n";
  if (!config.json_out.empty()) {
    std::ofstream out(config.json_out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << config.json_out << "'\n";
      return kExitUsage;
    }
    out << cplab::harness::report_to_json(report);
  }
  return report.failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_simulate(const cplab::rmt::RmtConfig& rc, const std::string& wc,
                 const std::string& csv_out, const std::string& spectrum_out) {
  WCandidate cand = candidate_from_string(wc);
  std::cout << "simulate: dim " << rc.dim << ", seed " << rc.seed << ", trials "
            << rc.trials << ", candidate " << cplab::to_string(cand) << "\n";

  cplab::rmt::Model m = cplab::rmt::build_generators(rc, 0, cand);
  std::cout << "relation residuals (trial 0):\n";
  for (const auto& [name, res] : cplab::rmt::relation_residuals(m))
    std::cout << "  " << name << " " << cplab::rmt::format_float(res) << "\n";

  static const std::vector<std::vector<std::string>> probes = {
      {"X1", "X1"},
      {"X1", "X1", "X1", "X1"},
      {"X1", "X2", "X1", "X2"},
      {"u", "X1", "u'", "X1"},
      {"X1", "X1", "X2", "X2"}};
  auto stats = cplab::rmt::estimate_word_traces(probes, rc, cand);
  std::cout << "word traces (mean, std error over " << rc.trials << " trials):\n";
  for (size_t i = 0; i < probes.size(); ++i) {
    std::cout << "  ";
    for (const auto& t : probes[i]) std::cout << t << " ";
    std::cout << "-> " << cplab::rmt::format_float(stats[i].mean.real()) << " +/- "
              << cplab::rmt::format_float(stats[i].std_error) << "\n";
  }

  auto eigs = cplab::rmt::spectrum(m.X1, rc.tol_exact);
  double ks = cplab::rmt::ks_semicircle(eigs);
  std::cout << "spectrum: " << eigs.size() << " eigenvalues in ["
            << cplab::rmt::format_float(eigs.front()) << ", "
            << cplab::rmt::format_float(eigs.back()) << "], KS vs semicircle "
            << cplab::rmt::format_float(ks) << "\n";

  if (!csv_out.empty()) {
    std::ofstream out(csv_out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << csv_out << "'\n";
      return kExitUsage;
    }
    cplab::rmt::write_histogram_csv(out, eigs, rc.bins);
    std::cout << "histogram written to " << csv_out << "\n";
  }
  if (!spectrum_out.empty()) {
    std::ofstream out(spectrum_out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << spectrum_out << "'\n";
      return kExitUsage;
    }
    cplab::rmt::write_spectrum_csv(out, eigs);
    std::cout << "spectrum written to " << spectrum_out << "\n";
  }
  return kExitOk;
}

int cmd_moments(const std::string& word, bool exact, bool mc,
                const cplab::rmt::RmtConfig& rc, const std::string& wc) {
  if (!exact && !mc) exact = true;
  if (exact) {
    const Algebra& alg = algebra_for_cli(wc);
    Element e = cplab::parse_element(word, alg);
    CycloNum t = trace(e);
    auto z = t.to_complex();
    std::cout << "exact: " << t.pretty() << " (" << cplab::rmt::format_float(z.real())
              << " + " << cplab::rmt::format_float(z.imag()) << "i)\n";
  }
  if (mc) {
    auto w = mc_word_from_text(word);
    auto stat = cplab::rmt::estimate_word_trace(w, rc, candidate_from_string(wc));
    std::cout << "mc: " << cplab::rmt::format_float(stat.mean.real()) << " + "
              << cplab::rmt::format_float(stat.mean.imag()) << "i +/- "
              << cplab::rmt::format_float(stat.std_error) << " (dim " << rc.dim
              << ", trials " << rc.trials << ", seed " << rc.seed << ")\n";
  }
  return kExitOk;
}

int cmd_parse(const std::string& word, const std::string& wc) {
  const Algebra& alg = algebra_for_cli(wc);
  Element e = cplab::parse_element(word, alg);
  std::cout << cplab::format_element(e) << "\n";
  return kExitOk;
}

int cmd_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open '" << path << "'\n";
    return kExitUsage;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  std::cout << cplab::harness::render_report_text(ss.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numerical checks for a twisted crossed-product model"};
  app.require_subcommand(1);

  cplab::harness::SuiteConfig suite;
  std::string config_path;

  auto add_rmt_flags = [&](CLI::App* cmd, cplab::rmt::RmtConfig& rc) {
    std::map<std::string, CLI::Option*> opts;
    opts["dim"] = cmd->add_option("--dim", rc.dim, "block dimension N");
    opts["seed"] = cmd->add_option("--seed", rc.seed, "master seed");
    opts["trials"] = cmd->add_option("--trials", rc.trials, "number of trials");
    opts["tol_exact"] = cmd->add_option("--tol-exact", rc.tol_exact,
                                        "residual tolerance for exact relations");
    opts["bins"] = cmd->add_option("--bins", rc.bins, "histogram bin count");
    return opts;
  };

  // check
  auto* check = app.add_subcommand("check", "run named verification checks");
  bool list_only = false;
  check->add_flag("--list", list_only, "list check names and exit");
  check->add_option("--only", suite.only, "run only these checks");
  check->add_option("--w-candidate", suite.w_candidate, "auto|paper|conjugate")
      ->check(CLI::IsMember({"auto", "paper", "conjugate"}));
  check->add_option("--json-out", suite.json_out, "write the JSON report here");
  check->add_option("--config", config_path, "key=value config file");
  auto check_opts = add_rmt_flags(check, suite.rmt);

  // simulate
  auto* sim = app.add_subcommand("simulate", "run the random-matrix experiments");
  cplab::rmt::RmtConfig sim_rc;
  std::string sim_wc = "auto", csv_out, spectrum_out;
  add_rmt_flags(sim, sim_rc);
  sim->add_option("--w-candidate", sim_wc, "auto|paper|conjugate")
      ->check(CLI::IsMember({"auto", "paper", "conjugate"}));
  sim->add_option("--csv-out", csv_out, "write the eigenvalue histogram CSV here");
  sim->add_option("--spectrum-out", spectrum_out, "write raw eigenvalues here");

  // moments
  auto* mom = app.add_subcommand("moments", "evaluate the trace of a word");
  std::string mom_word, mom_wc = "auto";
  bool mom_exact = false, mom_mc = false;
  cplab::rmt::RmtConfig mom_rc;
  mom->add_option("--word", mom_word, "word expression")->required();
  mom->add_flag("--exact", mom_exact, "use the exact engine");
  mom->add_flag("--mc", mom_mc, "use the Monte Carlo model");
  mom->add_option("--w-candidate", mom_wc, "auto|paper|conjugate")
      ->check(CLI::IsMember({"auto", "paper", "conjugate"}));
  add_rmt_flags(mom, mom_rc);

  // parse
  auto* par = app.add_subcommand("parse", "print the canonical form of a word");
  std::string par_word, par_wc = "auto";
  par->add_option("--word", par_word, "word expression")->required();
  par->add_option("--w-candidate", par_wc, "auto|paper|conjugate")
      ->check(CLI::IsMember({"auto", "paper", "conjugate"}));

  // report
  auto* rep = app.add_subcommand("report", "pretty-print a JSON report");
  std::string rep_in;
  rep->add_option("--in", rep_in, "report path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) {
      if (!config_path.empty()) {
        auto kv = read_config_file(config_path);
        auto apply = [&](const char* key, auto setter) {
          auto it = kv.find(key);
          if (it != kv.end() && check_opts[key]->count() == 0) setter(it->second);
        };
        apply("dim", [&](const std::string& v) { suite.rmt.dim = std::stoi(v); });
        apply("seed", [&](const std::string& v) { suite.rmt.seed = std::stoull(v); });
        apply("trials", [&](const std::string& v) { suite.rmt.trials = std::stoi(v); });
        apply("tol_exact", [&](const std::string& v) { suite.rmt.tol_exact = std::stod(v); });
        apply("bins", [&](const std::string& v) { suite.rmt.bins = std::stoi(v); });
        auto it = kv.find("w_candidate");
        if (it != kv.end() && check->count("--w-candidate") == 0) suite.w_candidate = it->second;
      }
      return cmd_check(suite, list_only);
    }
    if (*sim) return cmd_simulate(sim_rc, sim_wc, csv_out, spectrum_out);
    if (*mom) return cmd_moments(mom_word, mom_exact, mom_mc, mom_rc, mom_wc);
    if (*par) return cmd_parse(par_word, par_wc);
    if (*rep) return cmd_report(rep_in);
  } catch (const cplab::parse_error& e) {
    const std::string& word = *par ? par_word : mom_word;
    print_parse_error(word, e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
