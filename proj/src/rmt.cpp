#include "cplab/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace cplab::rmt {

namespace {

std::uint64_t splitmix_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t x) {
  std::uint64_t s = x;
  return splitmix_next(s);
}

void validate(const RmtConfig& config) {
  if (config.dim < 2) throw std::invalid_argument("RmtConfig: dim must be at least 2");
  if (config.trials < 1) throw std::invalid_argument("RmtConfig: trials must be at least 1");
}

}  // namespace

RngStream RngStream::for_trial(std::uint64_t master, std::uint64_t trial) {
  return RngStream(mix(master ^ mix(trial + 1)));
}

std::uint64_t RngStream::next_u64() { return splitmix_next(state_); }

double RngStream::next_unit() {
  // 53 random bits into (0,1]; flip to avoid log(0).
  std::uint64_t bits = next_u64() >> 11;
  return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double RngStream::next_real_gaussian(double variance) {
  double u1 = next_unit();
  double u2 = next_unit();
  return std::sqrt(-2.0 * variance * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> RngStream::next_complex_gaussian(double variance) {
  double u1 = next_unit();
  double u2 = next_unit();
  double r = std::sqrt(-variance * std::log(u1));
  return std::polar(r, 2.0 * std::numbers::pi * u2);
}

Mat sample_wigner(int n, RngStream& stream) {
  Mat m(n, n);
  double var = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    m(i, i) = stream.next_real_gaussian(var);
    for (int j = i + 1; j < n; ++j) {
      std::complex<double> z = stream.next_complex_gaussian(var);
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

Mat sample_ginibre(int n, RngStream& stream) {
  Mat m(n, n);
  double var = 1.0 / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = stream.next_complex_gaussian(var);
  return m;
}

// ---------------------------------------------------------------------------
// Exact 9x9 scalar model

CycloMat CycloMat::identity() {
  CycloMat r;
  for (int i = 0; i < 9; ++i) r.at(i, i) = CycloNum(1);
  return r;
}

CycloMat CycloMat::operator*(const CycloMat& o) const {
  CycloMat r;
  for (int i = 0; i < 9; ++i)
    for (int k = 0; k < 9; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < 9; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  return r;
}

CycloMat CycloMat::operator+(const CycloMat& o) const {
  CycloMat r;
  for (int i = 0; i < 81; ++i)
    r.m_[static_cast<size_t>(i)] = m_[static_cast<size_t>(i)] + o.m_[static_cast<size_t>(i)];
  return r;
}

CycloMat CycloMat::operator-(const CycloMat& o) const {
  CycloMat r;
  for (int i = 0; i < 81; ++i)
    r.m_[static_cast<size_t>(i)] = m_[static_cast<size_t>(i)] - o.m_[static_cast<size_t>(i)];
  return r;
}

CycloMat CycloMat::scaled(const CycloNum& c) const {
  CycloMat r;
  for (int i = 0; i < 81; ++i) r.m_[static_cast<size_t>(i)] = m_[static_cast<size_t>(i)] * c;
  return r;
}

CycloMat CycloMat::adjointed() const {
  CycloMat r;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) r.at(i, j) = at(j, i).conj();
  return r;
}

CycloMat CycloMat::pow(int n) const {
  CycloMat acc = identity();
  for (int i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

CycloNum CycloMat::normalized_trace() const {
  CycloNum t(0);
  for (int i = 0; i < 9; ++i) t += at(i, i);
  return t * CycloNum(Rational(1, 9));
}

bool CycloMat::is_monomial() const {
  for (int i = 0; i < 9; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < 9; ++j) {
      if (!at(i, j).is_zero()) ++row;
      if (!at(j, i).is_zero()) ++col;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

Eigen::Matrix<std::complex<double>, 9, 9> CycloMat::to_complex() const {
  Eigen::Matrix<std::complex<double>, 9, 9> r;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) r(i, j) = at(i, j).to_complex();
  return r;
}

ScalarModel scalar_model(WCandidate wc) {
  // Diagonal supports of the spectral projections, 0-based block indices.
  const std::array<std::array<int, 3>, 3> e_supp = {{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}};
  const std::array<std::array<int, 3>, 3> g_supp = {{{0, 4, 8}, {2, 3, 7}, {1, 5, 6}}};
  auto diag_mask = [](const std::array<int, 3>& supp) {
    CycloMat m;
    for (int p : supp) m.at(p, p) = CycloNum(1);
    return m;
  };
  std::array<CycloMat, 3> e1g, g1g;
  for (int i = 0; i < 3; ++i) {
    e1g[static_cast<size_t>(i)] = diag_mask(e_supp[static_cast<size_t>(i)]);
    g1g[static_cast<size_t>(i)] = diag_mask(g_supp[static_cast<size_t>(i)]);
  }
  CycloNum eps = CycloNum::eps();

  ScalarModel sm;
  sm.u1 = e1g[0].scaled(eps) + e1g[1].scaled(eps.pow(2)) + e1g[2];
  sm.g1 = g1g[0].scaled(eps) + g1g[1].scaled(eps.pow(2)) + g1g[2];
  sm.g3 = g1g[2];

  const int cycles[3][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  for (const auto& c : cycles) {
    sm.v.at(c[0], c[1]) = CycloNum(1);
    sm.v.at(c[1], c[2]) = CycloNum(1);
    sm.v.at(c[2], c[0]) = CycloNum(1);
  }

  std::array<CycloMat, 4> E;  // E[1..3]
  for (int l = 1; l <= 3; ++l) {
    CycloMat acc;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if ((i + j) % 3 == l % 3)
          acc = acc + e1g[static_cast<size_t>(i - 1)] * g1g[static_cast<size_t>(j - 1)];
    E[static_cast<size_t>(l)] = acc;
  }
  sm.E1 = E[1];
  sm.E2 = E[2];
  sm.E3 = E[3];

  CycloNum d = CycloNum::delta();
  if (wc == WCandidate::conjugate) d = d.conj();
  sm.W = E[1].scaled(d) + E[2].scaled(d.pow(2)) + E[3];
  return sm;
}

// ---------------------------------------------------------------------------
// BlockOperator

BlockOperator BlockOperator::from_scalar(const CycloMat& s, int n) {
  BlockOperator r(n);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      if (s.at(i, j).is_zero()) continue;
      r.set_block(i, j, s.at(i, j).to_complex() * Mat::Identity(n, n));
    }
  return r;
}

void BlockOperator::set_block(int i, int j, Mat m) {
  if (m.rows() != n_ || m.cols() != n_)
    throw std::invalid_argument("BlockOperator: block dimension mismatch");
  blocks_[static_cast<size_t>(i * 9 + j)] = std::move(m);
  present_[static_cast<size_t>(i * 9 + j)] = true;
}

BlockOperator BlockOperator::operator*(const BlockOperator& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BlockOperator: dimension mismatch");
  BlockOperator r(n_);
  for (int i = 0; i < 9; ++i)
    for (int k = 0; k < 9; ++k) {
      if (!has_block(i, k)) continue;
      for (int j = 0; j < 9; ++j) {
        if (!o.has_block(k, j)) continue;
        if (r.has_block(i, j))
          r.blocks_[static_cast<size_t>(i * 9 + j)].noalias() += block(i, k) * o.block(k, j);
        else
          r.set_block(i, j, block(i, k) * o.block(k, j));
      }
    }
  return r;
}

BlockOperator BlockOperator::operator+(const BlockOperator& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BlockOperator: dimension mismatch");
  BlockOperator r(n_);
  for (int i = 0; i < 81; ++i) {
    int a = i / 9, b = i % 9;
    if (has_block(a, b) && o.has_block(a, b))
      r.set_block(a, b, block(a, b) + o.block(a, b));
    else if (has_block(a, b))
      r.set_block(a, b, block(a, b));
    else if (o.has_block(a, b))
      r.set_block(a, b, o.block(a, b));
  }
  return r;
}

BlockOperator BlockOperator::operator-(const BlockOperator& o) const {
  return *this + o.scaled(-1.0);
}

BlockOperator BlockOperator::scaled(std::complex<double> c) const {
  BlockOperator r(n_);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (has_block(i, j)) r.set_block(i, j, c * block(i, j));
  return r;
}

BlockOperator BlockOperator::adjointed() const {
  BlockOperator r(n_);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (has_block(i, j)) r.set_block(j, i, block(i, j).adjoint());
  return r;
}

BlockOperator BlockOperator::conjugated_by_monomial(
    const Eigen::Matrix<std::complex<double>, 9, 9>& s) const {
  // s has one nonzero per row/column: (s M s*)_{ij} = f_i conj(f_j) M_{p(i) p(j)}.
  std::array<int, 9> perm{};
  std::array<std::complex<double>, 9> f{};
  for (int i = 0; i < 9; ++i) {
    int count = 0;
    for (int j = 0; j < 9; ++j) {
      if (std::abs(s(i, j)) > 0.0) {
        perm[static_cast<size_t>(i)] = j;
        f[static_cast<size_t>(i)] = s(i, j);
        ++count;
      }
    }
    if (count != 1)
      throw std::invalid_argument("conjugated_by_monomial: matrix is not monomial");
  }
  BlockOperator r(n_);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      int pi = perm[static_cast<size_t>(i)], pj = perm[static_cast<size_t>(j)];
      if (!has_block(pi, pj)) continue;
      r.set_block(i, j, f[static_cast<size_t>(i)] * std::conj(f[static_cast<size_t>(j)]) *
                            block(pi, pj));
    }
  return r;
}

std::complex<double> BlockOperator::normalized_trace() const {
  std::complex<double> t = 0.0;
  for (int i = 0; i < 9; ++i)
    if (has_block(i, i)) t += block(i, i).trace();
  return t / static_cast<double>(dim());
}

std::complex<double> BlockOperator::normalized_trace_of_product(const BlockOperator& o) const {
  std::complex<double> t = 0.0;
  for (int i = 0; i < 9; ++i)
    for (int k = 0; k < 9; ++k) {
      if (!has_block(i, k) || !o.has_block(k, i)) continue;
      t += block(i, k).cwiseProduct(o.block(k, i).transpose()).sum();
    }
  return t / static_cast<double>(dim());
}

double BlockOperator::frobenius() const {
  double s = 0.0;
  for (int i = 0; i < 81; ++i)
    if (present_[static_cast<size_t>(i)]) s += blocks_[static_cast<size_t>(i)].squaredNorm();
  return std::sqrt(s);
}

double BlockOperator::residual_norm() const { return frobenius() / std::sqrt(9.0 * n_); }

bool BlockOperator::is_hermitian(double tol) const {
  return (*this - adjointed()).residual_norm() <= tol;
}

Mat BlockOperator::to_dense() const {
  Mat m = Mat::Zero(dim(), dim());
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (has_block(i, j)) m.block(i * n_, j * n_, n_, n_) = block(i, j);
  return m;
}

// ---------------------------------------------------------------------------
// Model assembly

const std::array<std::array<int, 3>, 9>& x1_offdiag_positions() {
  // (row, col, a-index), 0-based: a10..a18 sit at indices 9..17.
  static const std::array<std::array<int, 3>, 9> pos = {{
      {0, 4, 9},   // 2Re(a10 (x) e15)
      {0, 8, 10},  // 2Re(a11 (x) e19)
      {1, 5, 11},  // 2Re(a12 (x) e26)
      {1, 6, 12},  // 2Re(a13 (x) e27)
      {2, 3, 13},  // 2Re(a14 (x) e34)
      {2, 7, 14},  // 2Re(a15 (x) e38)
      {3, 7, 15},  // 2Re(a16 (x) e48)
      {4, 8, 16},  // 2Re(a17 (x) e59)
      {5, 6, 17},  // 2Re(a18 (x) e67)
  }};
  return pos;
}

Model build_generators(const RmtConfig& config, int trial, WCandidate wc) {
  validate(config);
  Model m;
  m.dim = config.dim;
  m.candidate = wc;
  m.seed = config.seed;
  m.trial = trial;
  m.x_scale = 1.0 / std::sqrt(3.0);
  RngStream stream = RngStream::for_trial(config.seed, static_cast<std::uint64_t>(trial));
  for (int i = 0; i < 9; ++i) m.a[static_cast<size_t>(i)] = sample_wigner(config.dim, stream);
  for (int i = 9; i < 18; ++i) m.a[static_cast<size_t>(i)] = sample_ginibre(config.dim, stream);

  m.scalars = scalar_model(wc);
  m.u1 = BlockOperator::from_scalar(m.scalars.u1, config.dim);
  m.g1 = BlockOperator::from_scalar(m.scalars.g1, config.dim);
  m.v = BlockOperator::from_scalar(m.scalars.v, config.dim);
  m.W = BlockOperator::from_scalar(m.scalars.W, config.dim);

  BlockOperator x1(config.dim);
  for (int i = 0; i < 9; ++i)
    x1.set_block(i, i, m.x_scale * m.a[static_cast<size_t>(i)]);
  for (const auto& p : x1_offdiag_positions()) {
    const Mat& c = m.a[static_cast<size_t>(p[2])];
    x1.set_block(p[0], p[1], m.x_scale * c);
    x1.set_block(p[1], p[0], m.x_scale * c.adjoint());
  }
  m.X1 = x1;

  // X_{i+1} = Ad(W* v)(X_i); W* v is a monomial scalar matrix.
  CycloMat wsv = m.scalars.W.adjointed() * m.scalars.v;
  auto s = wsv.to_complex();
  m.X2 = m.X1.conjugated_by_monomial(s);
  m.X3 = m.X2.conjugated_by_monomial(s);
  return m;
}

BlockOperator model_operator(const Model& m, const std::string& name) {
  std::string base = name;
  bool star = false;
  if (!base.empty() && (base.back() == '\'' || base.back() == '*')) {
    star = true;
    base.pop_back();
  }
  const BlockOperator* op = nullptr;
  if (base == "X1") op = &m.X1;
  else if (base == "X2") op = &m.X2;
  else if (base == "X3") op = &m.X3;
  else if (base == "u") op = &m.u1;
  else if (base == "g") op = &m.g1;
  else if (base == "v") op = &m.v;
  else if (base == "W") op = &m.W;
  if (op == nullptr)
    throw std::invalid_argument("unknown model generator '" + name + "'");
  return star ? op->adjointed() : *op;
}

namespace {

// Balanced-split products, memoized per trial so that probe words sharing a
// subword (X1 X1, X1 X2, ...) pay for it once.
using ProductCache = std::map<std::vector<std::string>, BlockOperator>;

const BlockOperator& subword_product(const Model& m, const std::vector<std::string>& word,
                                     ProductCache& cache) {
  auto it = cache.find(word);
  if (it != cache.end()) return it->second;
  BlockOperator result;
  if (word.size() == 1) {
    result = model_operator(m, word[0]);
  } else {
    size_t mid = word.size() / 2;
    std::vector<std::string> left(word.begin(), word.begin() + static_cast<long>(mid));
    std::vector<std::string> right(word.begin() + static_cast<long>(mid), word.end());
    result = subword_product(m, left, cache) * subword_product(m, right, cache);
  }
  return cache.emplace(word, std::move(result)).first->second;
}

std::complex<double> word_trace_cached(const Model& m, const std::vector<std::string>& word,
                                       ProductCache& cache) {
  if (word.empty()) return 1.0;
  if (word.size() == 1) return model_operator(m, word[0]).normalized_trace();
  size_t mid = word.size() / 2;
  std::vector<std::string> left(word.begin(), word.begin() + static_cast<long>(mid));
  std::vector<std::string> right(word.begin() + static_cast<long>(mid), word.end());
  return subword_product(m, left, cache)
      .normalized_trace_of_product(subword_product(m, right, cache));
}

}  // namespace

std::complex<double> word_trace(const Model& m, const std::vector<std::string>& word) {
  ProductCache cache;
  return word_trace_cached(m, word, cache);
}

std::vector<TraceStat> estimate_word_traces(const std::vector<std::vector<std::string>>& words,
                                            const RmtConfig& config, WCandidate wc) {
  validate(config);
  std::vector<std::vector<std::complex<double>>> samples(words.size());
  for (int t = 0; t < config.trials; ++t) {
    Model m = build_generators(config, t, wc);
    ProductCache cache;
    for (size_t w = 0; w < words.size(); ++w)
      samples[w].push_back(word_trace_cached(m, words[w], cache));
  }
  std::vector<TraceStat> out;
  for (const auto& xs : samples) {
    std::complex<double> mean = 0.0;
    for (auto x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (auto x : xs) var += std::norm(x - mean);
    double se = 0.0;
    if (xs.size() > 1)
      se = std::sqrt(var / (static_cast<double>(xs.size()) *
                            (static_cast<double>(xs.size()) - 1.0)));
    out.push_back({mean, se});
  }
  return out;
}

TraceStat estimate_word_trace(const std::vector<std::string>& word, const RmtConfig& config,
                              WCandidate wc) {
  return estimate_word_traces({word}, config, wc)[0];
}

// ---------------------------------------------------------------------------
// Relations

std::vector<std::pair<std::string, double>> relation_residuals(const Model& m) {
  std::vector<std::pair<std::string, double>> out;
  const int n = m.dim;
  auto idb = BlockOperator::from_scalar(CycloMat::identity(), n);
  std::complex<double> eps = CycloNum::eps().to_complex();
  std::complex<double> epsb = std::conj(eps);

  auto push = [&](const std::string& name, const BlockOperator& diff) {
    out.emplace_back(name, diff.residual_norm());
  };

  push("u_order3", m.u1 * m.u1 * m.u1 - idb);
  push("g_order3", m.g1 * m.g1 * m.g1 - idb);
  push("v_cube", m.v * m.v * m.v - idb);
  push("W_unitary", m.W * m.W.adjointed() - idb);
  push("ug_commutation", m.u1 * m.g1 - m.g1 * m.u1);
  const BlockOperator* xs[3] = {&m.X1, &m.X2, &m.X3};
  for (int i = 0; i < 3; ++i)
    push("g_commutes_X" + std::to_string(i + 1), m.g1 * *xs[i] - *xs[i] * m.g1);
  push("v_u_commutation", m.v * m.u1 - (m.u1 * m.v).scaled(eps));
  push("v_g_commutation", m.v * m.g1 - (m.g1 * m.v).scaled(epsb));
  for (int i = 0; i < 3; ++i)
    push("X" + std::to_string(i + 1) + "_hermitian", *xs[i] - xs[i]->adjointed());

  CycloMat wsv = m.scalars.W.adjointed() * m.scalars.v;
  auto s = wsv.to_complex();
  push("X2_definition", m.X2 - m.X1.conjugated_by_monomial(s));
  push("X3_definition", m.X3 - m.X2.conjugated_by_monomial(s));

  // Ad v(X_i) = Ad W(alpha(X_i)): alpha cycles X1 -> X2 -> X3 -> u X1 u*.
  auto adv = [&](const BlockOperator& x) { return m.v * x * m.v.adjointed(); };
  auto adw = [&](const BlockOperator& x) { return m.W * x * m.W.adjointed(); };
  push("advX1_alpha", adv(m.X1) - adw(m.X2));
  push("advX2_alpha", adv(m.X2) - adw(m.X3));
  push("advX3_alpha", adv(m.X3) - adw(m.u1 * m.X1 * m.u1.adjointed()));

  // W^3 equals u (x) g under the paper convention, its adjoint under the
  // conjugate one.
  CycloMat ug = m.scalars.u1 * m.scalars.g1;
  CycloMat target = m.candidate == WCandidate::paper ? ug : ug.adjointed();
  push("W_cube_identity",
       m.W * m.W * m.W - BlockOperator::from_scalar(target, n));

  // X2 block table check: block (1,5) must be conj(delta)^2 a12 under the
  // paper convention, conjugated under the conjugate one.
  {
    CycloNum coeff = CycloNum::delta().conj().pow(2);
    if (m.candidate == WCandidate::conjugate) coeff = coeff.conj();
    Mat want = coeff.to_complex() * (m.x_scale * m.a[11]);
    Mat got = m.X2.has_block(0, 4) ? m.X2.block(0, 4) : Mat::Zero(n, n);
    out.emplace_back("X2_block15_table",
                     (got - want).norm() / std::sqrt(static_cast<double>(n)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectra

std::vector<double> spectrum(const BlockOperator& op, double tol) {
  if (!op.is_hermitian(tol))
    throw std::invalid_argument("spectrum: operator is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Mat> es(op.to_dense(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectrum: eigensolver failed");
  std::vector<double> eigs(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) +
         std::asin(x / 2.0) / std::numbers::pi;
}

double ks_semicircle(const std::vector<double>& eigs) {
  if (eigs.empty()) return 1.0;
  std::vector<double> xs = eigs;
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  const double n = static_cast<double>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    double f = semicircle_cdf(xs[i]);
    d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
  }
  return d;
}

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_histogram_csv(std::ostream& os, const std::vector<double>& values, int bins) {
  os << "bin_lo,bin_hi,count,density\n";
  if (values.empty() || bins <= 0) return;
  double lo = *std::min_element(values.begin(), values.end());
  double hi = *std::max_element(values.begin(), values.end());
  if (hi <= lo) hi = lo + 1.0;
  double width = (hi - lo) / bins;
  std::vector<long> count(static_cast<size_t>(bins), 0);
  for (double v : values) {
    int b = static_cast<int>((v - lo) / width);
    if (b < 0) b = 0;
    if (b >= bins) b = bins - 1;
    ++count[static_cast<size_t>(b)];
  }
  const double n = static_cast<double>(values.size());
  for (int b = 0; b < bins; ++b) {
    double blo = lo + b * width;
    double bhi = lo + (b + 1) * width;
    double density = count[static_cast<size_t>(b)] / (n * width);
    os << format_float(blo) << "," << format_float(bhi) << ","
       << count[static_cast<size_t>(b)] << "," << format_float(density) << "\n";
  }
}

void write_spectrum_csv(std::ostream& os, const std::vector<double>& values) {
  for (double v : values) os << format_float(v) << "\n";
}

// ---------------------------------------------------------------------------
// Compression

Compression compress_by_g3(const Model& m) {
  const int n = m.dim;
  const std::array<int, 3> keep = {1, 5, 6};  // 0-based block rows of 1 (x) g3
  Compression c;
  const BlockOperator* xs[3] = {&m.X1, &m.X2, &m.X3};
  for (int t = 0; t < 3; ++t) {
    Mat out = Mat::Zero(3 * n, 3 * n);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (xs[t]->has_block(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(j)]))
          out.block(i * n, j * n, n, n) =
              xs[t]->block(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(j)]);
    c.x[static_cast<size_t>(t)] = std::move(out);
  }
  Mat un = Mat::Zero(3 * n, 3 * n);
  for (int i = 0; i < 3; ++i) {
    CycloNum s = m.scalars.u1.at(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(i)]);
    c.unitary_diag[static_cast<size_t>(i)] = s;
    un.block(i * n, i * n, n, n) = s.to_complex() * Mat::Identity(n, n);
  }
  c.unitary = std::move(un);
  return c;
}

}  // namespace cplab::rmt
