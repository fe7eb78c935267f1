#include "cplab/harness.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cplab/freemoments.hpp"
#include "cplab/parser.hpp"
#include "cplab/presalg.hpp"

namespace cplab::harness {

namespace {

using json = nlohmann::ordered_json;

// The candidate every candidate-sensitive computation uses: the one whose
// action cubes to the identity ("conjugate"), unless forced.
WCandidate action_candidate(const SuiteConfig& c) {
  if (c.w_candidate == "paper") return WCandidate::paper;
  return WCandidate::conjugate;
}

// adU0-on-v pins the expected value derived under the "paper" coefficient
// convention; under "auto" it runs with that candidate.
WCandidate pinned_candidate(const SuiteConfig& c) {
  if (c.w_candidate == "conjugate") return WCandidate::conjugate;
  return WCandidate::paper;
}

const Algebra& algebra_for(WCandidate wc) {
  static const Algebra paper(8, WCandidate::paper);
  static const Algebra conj(8, WCandidate::conjugate);
  return wc == WCandidate::paper ? paper : conj;
}

CycloNum eps() { return CycloNum::eps(); }
CycloNum delta() { return CycloNum::delta(); }

std::string yesno(bool b) { return b ? "yes" : "no"; }

using CheckFn = std::function<void(CheckResult&, const SuiteConfig&)>;

struct CheckSpec {
  const char* name;
  const char* kind;
  CheckFn fn;
};

// ---------------------------------------------------------------------------
// Exact symbolic checks

void check_theta_cube_inner(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  std::vector<Element> gens = {A.gU03(), A.U(1), A.U(2), A.U(3), A.U(4)};
  bool ok = substitutions_agree_on(gens, power(A.theta(), 3), inner(A.gU03()));
  r.passed = ok;
  r.measured = ok ? "agree on all 5 probe generators" : "disagree";
  r.expected = "theta^3 = Ad(g U0^3) on {g U0^3, U1..U4}";
  r.tolerance = "exact";
}

void check_theta_obstruction(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  auto ratio = scalar_ratio(apply(A.theta(), A.gU03()), A.gU03());
  r.expected = "eps^-1";
  r.measured = ratio ? ratio->pretty() : "none";
  r.passed = ratio && *ratio == eps().conj();
  r.tolerance = "exact";
  r.details =
      "computed outer invariant is (3, eps^-1); the conjugate convention (3, eps) "
      "does not match the engine value";
}

void check_relative_commutant(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  std::vector<Element> probes = {A.gU03(), A.U(1), A.U(2), A.U(3), A.U(4)};
  auto commutes = [&](const Element& x) {
    for (const Element& p : probes)
      if (!(x * p == p * x)) return false;
    return true;
  };
  // The U0-degree 3 and 6 coefficients allowed in the relative commutant
  // collapse into the order-3 unitary's algebra: g^2 U0^6 * U0^3 = g^2 and
  // g U0^3 * U0^6 = g.
  Element a3 = A.g().pow(2) * A.gen_pow(GeneratorSymbol::U(0), 6) *
               A.gen_pow(GeneratorSymbol::U(0), 3);
  Element a6 = A.gU03() * A.gen_pow(GeneratorSymbol::U(0), 6);
  bool collapse = a3 == A.g().pow(2) && a6 == A.g();
  bool pos = commutes(A.one()) && commutes(A.g()) && commutes(A.g().pow(2)) &&
             commutes(a3) && commutes(a6);
  bool neg = !commutes(A.U(0)) && !commutes(A.g() * A.gen_pow(GeneratorSymbol::U(0), 6)) &&
             !commutes(A.gen_pow(GeneratorSymbol::U(0), 3));
  r.passed = collapse && pos && neg;
  std::ostringstream os;
  os << "collapse to {g}'': " << yesno(collapse) << "; 1,g,g^2 commute: " << yesno(pos)
     << "; U0, g U0^6, U0^3 do not: " << yesno(neg);
  r.measured = os.str();
  r.expected = "relative commutant = {g}''";
  r.tolerance = "exact";
}

void check_w_cube_root(CheckResult& r, const SuiteConfig&) {
  std::ostringstream meas;
  int winners = 0;
  std::string selected = "none";
  for (WCandidate wc : {WCandidate::paper, WCandidate::conjugate}) {
    const Algebra& A = algebra_for(wc);
    Element target = adjoint(A.u() * A.g());
    auto ratio = scalar_ratio(A.W_elem().pow(3), target);
    bool cube_ok = ratio && ratio->is_one();
    bool gamma3_ok = substitutions_agree_on(A.action_generator_elements(true),
                                            power(A.gamma_sub(), 3), A.identity_sub());
    if (cube_ok && gamma3_ok) {
      ++winners;
      selected = to_string(wc);
    }
    meas << to_string(wc) << ": W^3=(u g)* " << yesno(cube_ok) << ", gamma^3=id "
         << yesno(gamma3_ok) << "; ";
  }
  r.passed = winners == 1;
  r.measured = meas.str();
  r.expected = "exactly one candidate satisfies both";
  r.tolerance = "exact";
  r.details = "selected candidate: " + selected +
              " (informational: the other candidate failing is the expected outcome)";
}

void check_gamma_fixes_w(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  bool ok = apply(A.alpha_tensor_beta(), A.W_elem()) == A.W_elem();
  r.passed = ok;
  r.measured = ok ? "(alpha x beta)(W) == W" : "not fixed";
  r.expected = "W fixed by alpha x beta";
  r.tolerance = "exact";
}

void check_adU0_on_v(CheckResult& r, const SuiteConfig& cfg) {
  WCandidate wc = pinned_candidate(cfg);
  const Algebra& A = algebra_for(wc);
  Element measured = apply(inner(A.U(0)), A.v());
  Element expected =
      wc == WCandidate::paper
          ? (A.E_proj(1) + A.E_proj(2) + A.E_proj(3) * eps()) * delta().pow(-2) * A.v()
          : (A.E_proj(1) + A.E_proj(2) + A.E_proj(3) * eps().conj()) * A.v();
  r.passed = measured == expected;
  r.measured = format_element(measured);
  r.expected = format_element(expected);
  r.tolerance = "exact";
  r.details = std::string("evaluated with the ") + to_string(wc) +
              " candidate; the form delta^-2 (E1+E2+eps E3) v belongs to the paper "
              "coefficient convention";
}

void check_adU0_on_Ei(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  Substitution ad = inner(A.U(0));
  bool ok = true;
  for (int i = 1; i <= 3; ++i)
    if (!(apply(ad, A.E_proj(i)) == A.E_proj(i % 3 + 1))) ok = false;
  r.passed = ok;
  r.measured = ok ? "Ad(U0)(E_i) = E_{i+1} for i=1,2,3" : "mismatch";
  r.expected = "cyclic shift of the E projections";
  r.tolerance = "exact";
}

void check_theta_A_kernel(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  Substitution th = A.theta();
  std::vector<Element> agens = {A.x(1), A.x(2), A.x(3), A.u(), A.g(), A.v()};
  bool cube = substitutions_agree_on(agens, power(th, 3), inner(adjoint(A.g())));
  auto ratio = scalar_ratio(apply(th, adjoint(A.g())), adjoint(A.g()));
  bool obstruction = ratio && *ratio == eps();
  r.passed = cube && obstruction;
  std::ostringstream os;
  os << "theta^3 = Ad(g*) on A generators: " << yesno(cube)
     << "; theta(g*) = " << (ratio ? ratio->pretty() : "none") << " g*";
  r.measured = os.str();
  r.expected = "theta^3 = Ad(g*), obstruction eps";
  r.tolerance = "exact";
}

void check_beta_xn(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  Substitution be = A.beta();
  bool ok = true;
  for (int n = 1; n <= 6; ++n)
    if (!(apply(be, A.make_xn(n)) == A.make_xn(n) * delta())) ok = false;
  r.passed = ok;
  r.measured = ok ? "beta(x_n) = delta x_n for n=1..6" : "mismatch";
  r.expected = "scalar delta for every n";
  r.tolerance = "exact";
}

void check_beta_un(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  Substitution be = A.beta();
  bool ok = true;
  for (int n = 1; n <= 6; ++n)
    if (!(apply(be, A.make_un(n)) == A.make_un(n))) ok = false;
  r.passed = ok;
  r.measured = ok ? "beta(u_n) = u_n for n=1..6" : "mismatch";
  r.expected = "u_n fixed for every n";
  r.tolerance = "exact";
}

void check_adxn_locality(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  Substitution be = A.beta();
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    std::vector<Element> gens = {A.g()};
    for (int k = 0; k < n; ++k) gens.push_back(A.U(k));
    if (!substitutions_agree_on(gens, inner(A.make_xn(n)), be)) ok = false;
  }
  r.passed = ok;
  r.measured = ok ? "Ad(x_n) = beta on {g, U0..U_{n-1}} for n=1..6" : "mismatch";
  r.expected = "agreement on the first n generators";
  r.tolerance = "exact";
}

void check_kappa_sigma(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  Substitution ph = A.phi();
  bool ok = true;
  std::string val = "none";
  for (int n = 1; n <= 6; ++n) {
    Element prod = adjoint(A.make_un(n)) * apply(ph, A.make_un(n));
    if (!(prod == A.one() * delta())) {
      ok = false;
    } else if (n == 1) {
      val = prod.scalar_value().pretty();
    }
  }
  r.passed = ok;
  r.measured = ok ? val + " for all n=1..6" : "mismatch";
  r.expected = "delta";
  r.tolerance = "exact (no tolerance)";
}

void check_beta_mu_cube_dual(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  Element m = A.normal_form({{GeneratorSymbol::U(0), -3}, {GeneratorSymbol::g(), 1}});
  Substitution adm = inner(m);
  Substitution bm3 = power(A.beta_mu(), 3);
  bool dual = apply(adm, A.v()) == A.v() * eps().conj();
  bool ok = true;
  for (int k = 0; k <= 2 && ok; ++k) {
    for (const Element& a : A.action_generator_elements(false)) {
      Element t = a * A.gen_pow(GeneratorSymbol::v(), k);
      if (!(apply(bm3, t) == apply(adm, t * eps().pow(k)))) {
        ok = false;
        break;
      }
    }
  }
  r.passed = ok && dual;
  std::ostringstream os;
  os << "beta_mu^3(a v^k) = Ad((U0*)^3 g)(eps^k a v^k): " << yesno(ok)
     << "; Ad((U0*)^3 g)(v) = eps^-1 v: " << yesno(dual);
  r.measured = os.str();
  r.expected = "dual action up to the inner Ad((U0*)^3 g)";
  r.tolerance = "exact";
}

void check_gamma_decomposition(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  Substitution dec = compose(inner(A.W_elem()), compose(A.gamma1(), A.gamma2()));
  bool decomposes =
      substitutions_agree_on(A.generator_elements(false), A.gamma_sub(), dec);
  bool cube = substitutions_agree_on(A.generator_elements(false), power(A.gamma1(), 3),
                                     inner(A.u()));
  auto ratio = scalar_ratio(apply(A.gamma1(), A.u()), A.u());
  bool obstruction = ratio && *ratio == eps();
  r.passed = decomposes && cube && obstruction;
  std::ostringstream os;
  os << "gamma = Ad W gamma1 gamma2: " << yesno(decomposes)
     << "; gamma1^3 = Ad(u): " << yesno(cube)
     << "; gamma1(u)/u = " << (ratio ? ratio->pretty() : "none");
  r.measured = os.str();
  r.expected = "decomposition holds, gamma1 obstruction eps";
  r.tolerance = "exact";
}

void check_parameter_arithmetic(CheckResult& r, const SuiteConfig&) {
  Rational free_dim_z3 = Rational(1) - rational(1, 3);          // 1 - 1/3
  Rational t_compressed = Rational(3) + free_dim_z3;            // 11/3
  Rational t_full = Rational(1) + (t_compressed - 1) / Rational(9);  // 35/27
  bool ok = t_compressed == rational(11, 3) && t_full == rational(35, 27);
  r.passed = ok;
  r.measured = to_string(t_compressed) + " and " + to_string(t_full);
  r.expected = "11/3 and 35/27";
  r.tolerance = "exact rational";
}

void check_moment_oracle(CheckResult& r, const SuiteConfig&) {
  long checked = 0;
  bool ok = true;
  // Exhaustive two-letter words up to length 8 against the enumeration oracle.
  for (int len = 0; len <= 8 && ok; ++len) {
    for (long mask = 0; mask < (1L << len); ++mask) {
      std::vector<int> labels;
      FreeWord w;
      for (int i = 0; i < len; ++i) {
        int lab = (mask >> i) & 1 ? 2 : 1;
        labels.push_back(lab);
        w.letters.push_back(lab == 1 ? L1::X1 : L1::X2);
      }
      Rational got = mixed_moment_rational(w, nullptr);
      if (got != Rational(static_cast<long>(nc_pairings_bruteforce(labels)))) {
        ok = false;
        break;
      }
      ++checked;
    }
  }
  // Single-letter words of length 10 and 12.
  for (int len : {10, 12}) {
    std::vector<int> labels(static_cast<size_t>(len), 1);
    FreeWord w;
    for (int i = 0; i < len; ++i) w.letters.push_back(L1::X1);
    if (mixed_moment_rational(w, nullptr) !=
        Rational(static_cast<long>(nc_pairings_bruteforce(labels))))
      ok = false;
    ++checked;
  }
  r.passed = ok;
  std::ostringstream os;
  os << (ok ? "recursion matches enumeration on " : "mismatch within ") << checked
     << " words";
  r.measured = os.str();
  r.expected = "mixed_moment == non-crossing pairing count";
  r.tolerance = "exact";
}

// ---------------------------------------------------------------------------
// Matrix-model checks

void check_rmt_relations(CheckResult& r, const SuiteConfig& cfg) {
  rmt::Model m = rmt::build_generators(cfg.rmt, 0, action_candidate(cfg));
  double maxres = 0.0;
  std::string worst;
  for (const auto& [name, res] : rmt::relation_residuals(m)) {
    if (res > maxres) {
      maxres = res;
      worst = name;
    }
  }
  r.passed = maxres <= cfg.rmt.tol_exact;
  r.measured = "max residual " + rmt::format_float(maxres) + " (" + worst + ")";
  r.expected = "all residuals <= tol_exact";
  r.tolerance = rmt::format_float(cfg.rmt.tol_exact);
  r.details = std::string("candidate: ") + to_string(m.candidate) + ", N = " +
              std::to_string(cfg.rmt.dim);
}

const std::vector<std::vector<std::string>>& v_probe_words() {
  static const std::vector<std::vector<std::string>> words = {
      {"v", "X1"},           {"v", "X2"},          {"v", "X3"},
      {"v", "u"},            {"v", "g"},           {"v", "X1", "X1"},
      {"v", "X1", "X2"},     {"v", "u", "X1"},     {"v", "g", "X1", "X1"},
      {"v", "X1", "X2", "X3"},
  };
  return words;
}

void check_rmt_v_trace_zero(CheckResult& r, const SuiteConfig& cfg) {
  rmt::Model m = rmt::build_generators(cfg.rmt, 0, action_candidate(cfg));
  double worst = 0.0;
  for (const auto& w : v_probe_words())
    worst = std::max(worst, std::abs(rmt::word_trace(m, w)));
  std::vector<std::string> sq = {"v", "v", "X1", "X1"};
  double worst2 = std::abs(rmt::word_trace(m, sq));
  r.passed = worst <= 1e-12 && worst2 <= 1e-12;
  r.measured = "max |trace| " + rmt::format_float(std::max(worst, worst2)) + " over " +
               std::to_string(v_probe_words().size()) + " v-words (plus one v^2 word)";
  r.expected = "0 (zero diagonal block pattern)";
  r.tolerance = "1e-12";
}

void check_rmt_vs_exact(CheckResult& r, const SuiteConfig& cfg) {
  const Algebra& A = algebra_for(action_candidate(cfg));
  static const std::vector<std::pair<std::string, std::vector<std::string>>> probes = {
      {"X1 X1", {"X1", "X1"}},
      {"X1 X1 X1 X1", {"X1", "X1", "X1", "X1"}},
      {"X1 X2 X1 X2", {"X1", "X2", "X1", "X2"}},
      {"u X1 u' X1", {"u", "X1", "u'", "X1"}},
      {"X1 X1 X2 X2", {"X1", "X1", "X2", "X2"}},
  };
  std::vector<std::vector<std::string>> words;
  for (const auto& [text, w] : probes) words.push_back(w);
  auto stats = rmt::estimate_word_traces(words, cfg.rmt, action_candidate(cfg));
  bool ok = true;
  std::ostringstream os;
  for (size_t i = 0; i < probes.size(); ++i) {
    double exact = trace(parse_element(probes[i].first, A)).to_complex().real();
    double err = std::abs(stats[i].mean - exact);
    double tol = std::max(3.0 * stats[i].std_error, 1e-2);
    if (err > tol) ok = false;
    os << probes[i].first << ": mc " << rmt::format_float(stats[i].mean.real())
       << " exact " << rmt::format_float(exact) << " (err " << rmt::format_float(err)
       << ", tol " << rmt::format_float(tol) << "); ";
  }
  r.passed = ok;
  r.measured = os.str();
  r.expected = "|mc - exact| <= max(3 SE, 1e-2) per word";
  r.tolerance = "max(3 SE, 1e-2)";
  r.details = "N = " + std::to_string(cfg.rmt.dim) + ", trials = " +
              std::to_string(cfg.rmt.trials);
}

void check_rmt_semicircle(CheckResult& r, const SuiteConfig& cfg) {
  rmt::Model m = rmt::build_generators(cfg.rmt, 0, action_candidate(cfg));
  auto eigs = rmt::spectrum(m.X1, cfg.rmt.tol_exact);
  double ks = rmt::ks_semicircle(eigs);
  r.passed = ks <= 0.05;
  r.measured = "KS distance " + rmt::format_float(ks) + " (matrix size " +
               std::to_string(9 * cfg.rmt.dim) + ")";
  r.expected = "KS <= 0.05";
  r.tolerance = "0.05";
}

void check_rmt_compression(CheckResult& r, const SuiteConfig& cfg) {
  rmt::Model m = rmt::build_generators(cfg.rmt, 0, action_candidate(cfg));
  rmt::Compression c = rmt::compress_by_g3(m);

  CycloNum e2 = eps().pow(2);
  bool exact_diag = c.unitary_diag[0] == e2 && c.unitary_diag[1] == CycloNum(1) &&
                    c.unitary_diag[2] == eps();
  bool order3 = true;
  {
    CycloNum prod[3];
    for (int i = 0; i < 3; ++i) {
      prod[i] = c.unitary_diag[static_cast<size_t>(i)].pow(3);
      if (!prod[i].is_one()) order3 = false;
    }
  }

  // Printed compressed generator lists: (block row, block col, a index 1-based,
  // power of delta). Conjugate candidate conjugates the powers.
  struct Entry {
    int i, j, a, dpow;
  };
  static const std::vector<std::vector<Entry>> table = {
      {{0, 0, 2, 0}, {1, 1, 6, 0}, {2, 2, 7, 0}, {0, 1, 12, 0}, {0, 2, 13, 0}, {1, 2, 18, 0}},
      {{0, 0, 3, 0}, {1, 1, 4, 0}, {2, 2, 8, 0}, {0, 1, 14, -2}, {0, 2, 15, -1}, {1, 2, 16, 1}},
      {{0, 0, 1, 0}, {1, 1, 5, 0}, {2, 2, 9, 0}, {0, 1, 10, -4}, {0, 2, 11, -2}, {1, 2, 17, 2}},
  };
  double maxres = 0.0;
  const int n = m.dim;
  for (int t = 0; t < 3; ++t) {
    for (const Entry& en : table[static_cast<size_t>(t)]) {
      CycloNum coeff = delta().pow(en.dpow);
      if (m.candidate == WCandidate::conjugate) coeff = coeff.conj();
      rmt::Mat want = coeff.to_complex() * (m.x_scale * m.a[static_cast<size_t>(en.a - 1)]);
      rmt::Mat got = c.x[static_cast<size_t>(t)].block(en.i * n, en.j * n, n, n);
      maxres = std::max(maxres, (got - want).norm() / std::sqrt(static_cast<double>(n)));
    }
    rmt::Mat diff = c.x[static_cast<size_t>(t)] -
                    c.x[static_cast<size_t>(t)].adjoint();
    maxres = std::max(maxres, diff.norm() / std::sqrt(3.0 * n));
  }
  bool blocks_ok = maxres <= cfg.rmt.tol_exact;
  r.passed = exact_diag && order3 && blocks_ok;
  std::ostringstream os;
  os << "unitary diag (eps^2, 1, eps): " << yesno(exact_diag) << "; cube = 1 exactly: "
     << yesno(order3) << "; block residual " << rmt::format_float(maxres);
  r.measured = os.str();
  r.expected = "compressed generator table up to the recorded candidate";
  r.tolerance = rmt::format_float(cfg.rmt.tol_exact);
  r.details = std::string("candidate: ") + to_string(m.candidate);
}

// ---------------------------------------------------------------------------
// Registry

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> checks = {
      {"theta-cube-inner", "exact-symbolic", check_theta_cube_inner},
      {"theta-obstruction", "exact-symbolic", check_theta_obstruction},
      {"relative-commutant-probe", "exact-symbolic", check_relative_commutant},
      {"w-cube-root", "exact-symbolic", check_w_cube_root},
      {"gamma-fixes-W", "exact-symbolic", check_gamma_fixes_w},
      {"adU0-on-v", "exact-symbolic", check_adU0_on_v},
      {"adU0-on-Ei", "exact-symbolic", check_adU0_on_Ei},
      {"theta-A-kernel", "exact-symbolic", check_theta_A_kernel},
      {"beta-xn", "exact-symbolic", check_beta_xn},
      {"beta-un", "exact-symbolic", check_beta_un},
      {"adxn-locality", "exact-symbolic", check_adxn_locality},
      {"kappa-sigma", "exact-symbolic", check_kappa_sigma},
      {"beta-mu-cube-dual", "exact-symbolic", check_beta_mu_cube_dual},
      {"gamma-decomposition", "exact-symbolic", check_gamma_decomposition},
      {"parameter-arithmetic", "arithmetic", check_parameter_arithmetic},
      {"moment-oracle", "exact-symbolic", check_moment_oracle},
      {"rmt-relations", "exact-matrix", check_rmt_relations},
      {"rmt-v-trace-zero", "exact-matrix", check_rmt_v_trace_zero},
      {"rmt-vs-exact", "statistical", check_rmt_vs_exact},
      {"rmt-semicircle", "statistical", check_rmt_semicircle},
      {"rmt-compression", "exact-matrix", check_rmt_compression},
  };
  return checks;
}

const CheckSpec& find_check(const std::string& name) {
  for (const CheckSpec& c : registry())
    if (name == c.name) return c;
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace

std::vector<std::string> list_checks() {
  std::vector<std::string> names;
  for (const CheckSpec& c : registry()) names.emplace_back(c.name);
  return names;
}

CheckResult run_check(const std::string& name, const SuiteConfig& config) {
  const CheckSpec& spec = find_check(name);
  CheckResult r;
  r.name = spec.name;
  r.kind = spec.kind;
  try {
    spec.fn(r, config);
  } catch (const std::exception& e) {
    r.passed = false;
    if (r.measured.empty()) r.measured = "error";
    r.details = std::string("exception: ") + e.what();
  }
  return r;
}

SuiteReport run_suite(const SuiteConfig& config) {
  std::vector<std::string> names = config.only.empty() ? list_checks() : config.only;
  for (const std::string& n : names) find_check(n);  // reject unknown names up front
  SuiteReport report;
  report.config = config;
  for (const std::string& n : names) {
    CheckResult r = run_check(n, config);
    report.total += 1;
    (r.passed ? report.passed : report.failed) += 1;
    report.checks.push_back(std::move(r));
  }
  return report;
}

std::string report_to_json(const SuiteReport& report) {
  json j;
  j["schema_version"] = 1;
  j["master_seed"] = report.config.rmt.seed;
  json cfg;
  cfg["dim"] = report.config.rmt.dim;
  cfg["seed"] = report.config.rmt.seed;
  cfg["trials"] = report.config.rmt.trials;
  cfg["tol_exact"] = report.config.rmt.tol_exact;
  cfg["bins"] = report.config.rmt.bins;
  cfg["w_candidate"] = report.config.w_candidate;
  cfg["only"] = report.config.only;
  j["config"] = cfg;
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json jc;
    jc["name"] = c.name;
    jc["kind"] = c.kind;
    jc["passed"] = c.passed;
    jc["measured"] = c.measured;
    jc["expected"] = c.expected;
    jc["tolerance"] = c.tolerance;
    jc["details"] = c.details;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  json summary;
  summary["total"] = report.total;
  summary["passed"] = report.passed;
  summary["failed"] = report.failed;
  j["summary"] = summary;
  return j.dump(2) + "\n";
}

std::string render_report_text(const std::string& json_text) {
  json j = json::parse(json_text);
  std::ostringstream os;
  os << "suite report (seed " << j.at("master_seed") << ")\n";
  for (const auto& c : j.at("checks")) {
    os << "  [" << (c.at("passed").get<bool>() ? "PASS" : "FAIL") << "] "
       << c.at("name").get<std::string>() << " (" << c.at("kind").get<std::string>()
       << ")\n";
    os << "        measured: " << c.at("measured").get<std::string>() << "\n";
    os << "        expected: " << c.at("expected").get<std::string>()
       << "  tolerance: " << c.at("tolerance").get<std::string>() << "\n";
    std::string det = c.at("details").get<std::string>();
    if (!det.empty()) os << "        details:  " << det << "\n";
  }
  const auto& s = j.at("summary");
  os << "summary: " << s.at("passed") << "/" << s.at("total") << " passed, "
     << s.at("failed") << " failed\n";
  return os.str();
}

}  // namespace cplab::harness
