#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cplab/cyclo.hpp"
#include "cplab/presalg.hpp"

namespace cplab::rmt {

using Mat = Eigen::MatrixXcd;

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct RmtConfig {
  int dim = 300;                 // block dimension N
  std::uint64_t seed = kDefaultSeed;
  int trials = 20;
  double tol_exact = 1e-10;      // identity-level residual tolerance
  int bins = 61;
};

/// SplitMix64 stream: 64-bit state advanced by the golden-gamma increment,
/// output mixed by the standard finalizer. Seedable, platform-independent,
/// and splittable: per-trial streams are derived by hashing (seed, trial),
/// so trials are independent and order-insensitive.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}
  static RngStream for_trial(std::uint64_t master, std::uint64_t trial);

  std::uint64_t next_u64();
  /// Uniform in (0,1), never exactly 0.
  double next_unit();
  /// Box-Muller on the unit stream; E[x^2] = variance.
  double next_real_gaussian(double variance);
  /// Polar Box-Muller; E|z|^2 = variance.
  std::complex<double> next_complex_gaussian(double variance);

 private:
  std::uint64_t state_;
};

/// N x N Hermitian Wigner block: off-diagonal complex Gaussian with
/// E|a_ij|^2 = 1/N, real Gaussian diagonal with variance 1/N. Normalized
/// trace of the square has expectation 1.
Mat sample_wigner(int n, RngStream& stream);
/// N x N Ginibre block: iid complex Gaussian entries, E|c_ij|^2 = 1/N.
Mat sample_ginibre(int n, RngStream& stream);

/// 9x9 matrix over the cyclotomic field. Small and exact; the scalar part of
/// the block model lives here.
class CycloMat {
 public:
  CycloMat() = default;
  static CycloMat identity();

  const CycloNum& at(int i, int j) const { return m_[static_cast<size_t>(i * 9 + j)]; }
  CycloNum& at(int i, int j) { return m_[static_cast<size_t>(i * 9 + j)]; }

  CycloMat operator*(const CycloMat& o) const;
  CycloMat operator+(const CycloMat& o) const;
  CycloMat operator-(const CycloMat& o) const;
  CycloMat scaled(const CycloNum& c) const;
  CycloMat adjointed() const;
  CycloMat pow(int n) const;
  bool operator==(const CycloMat& o) const { return m_ == o.m_; }
  CycloNum normalized_trace() const;

  /// Exactly one nonzero entry in every row and column.
  bool is_monomial() const;
  Eigen::Matrix<std::complex<double>, 9, 9> to_complex() const;

 private:
  std::array<CycloNum, 81> m_{};
};

/// The exact scalar operators of the 9x9 model.
struct ScalarModel {
  CycloMat u1;              // u (x) 1
  CycloMat g1;              // 1 (x) g
  CycloMat v;
  CycloMat W;               // per candidate
  CycloMat E1, E2, E3;
  CycloMat g3;              // 1 (x) g_3, the compression projection
};
ScalarModel scalar_model(WCandidate wc);

/// 9x9 grid of N x N complex blocks, with structural zeros tracked so that
/// block-sparse products skip absent blocks and exact zero patterns stay
/// exactly zero.
class BlockOperator {
 public:
  BlockOperator() : n_(0) {}
  explicit BlockOperator(int n) : n_(n) {}
  static BlockOperator from_scalar(const CycloMat& s, int n);

  int block_dim() const { return n_; }
  int dim() const { return 9 * n_; }
  bool has_block(int i, int j) const { return present_[static_cast<size_t>(i * 9 + j)]; }
  const Mat& block(int i, int j) const { return blocks_[static_cast<size_t>(i * 9 + j)]; }
  void set_block(int i, int j, Mat m);

  BlockOperator operator*(const BlockOperator& o) const;
  BlockOperator operator+(const BlockOperator& o) const;
  BlockOperator operator-(const BlockOperator& o) const;
  BlockOperator scaled(std::complex<double> c) const;
  BlockOperator adjointed() const;
  /// Ad(S (x) I) for a monomial scalar matrix S; O(n^2).
  BlockOperator conjugated_by_monomial(const Eigen::Matrix<std::complex<double>, 9, 9>& s) const;

  std::complex<double> normalized_trace() const;
  /// Normalized trace of (*this) * o without forming the product.
  std::complex<double> normalized_trace_of_product(const BlockOperator& o) const;
  double frobenius() const;
  /// Frobenius norm scaled by sqrt(9N): the residual measure for identities.
  double residual_norm() const;
  bool is_hermitian(double tol) const;
  Mat to_dense() const;

 private:
  int n_;
  std::array<Mat, 81> blocks_;
  std::array<bool, 81> present_{};
};

/// One trial's worth of generators. The sampled blocks a1..a18 are kept
/// unscaled; the assembled X operators carry the 1/sqrt(3) normalization
/// that gives tau(X^2) = 1 (three nonzero blocks per block row).
struct Model {
  int dim = 0;
  WCandidate candidate = WCandidate::paper;
  std::uint64_t seed = 0;
  int trial = 0;
  double x_scale = 0.0;             // 1/sqrt(3)
  std::array<Mat, 18> a;            // a1..a9 Wigner, a10..a18 Ginibre
  BlockOperator X1, X2, X3;
  BlockOperator u1, g1, v, W;
  ScalarModel scalars;
};

Model build_generators(const RmtConfig& config, int trial, WCandidate wc);

/// Positions (row, col, a-index) of the upper off-diagonal circular blocks of
/// X1 (x) 1; all 0-based.
const std::array<std::array<int, 3>, 9>& x1_offdiag_positions();

/// Operator lookup by name: X1 X2 X3 u g v W, with optional adjoint suffix
/// "'" or "*". Throws std::invalid_argument for unknown names.
BlockOperator model_operator(const Model& m, const std::string& name);

struct TraceStat {
  std::complex<double> mean;
  double std_error;
};

std::vector<TraceStat> estimate_word_traces(const std::vector<std::vector<std::string>>& words,
                                            const RmtConfig& config, WCandidate wc);
TraceStat estimate_word_trace(const std::vector<std::string>& word, const RmtConfig& config,
                              WCandidate wc);
/// Single-trial normalized trace of the named word in an existing model.
std::complex<double> word_trace(const Model& m, const std::vector<std::string>& word);

/// Scaled Frobenius residuals of the model relations, in a fixed order.
std::vector<std::pair<std::string, double>> relation_residuals(const Model& m);

/// Eigenvalues (ascending) of a Hermitian block operator.
std::vector<double> spectrum(const BlockOperator& op, double tol);
double semicircle_cdf(double x);
/// Sup distance between the empirical CDF and the semicircle CDF on [-2,2].
double ks_semicircle(const std::vector<double>& eigs);

/// CSV, header "bin_lo,bin_hi,count,density", floats with 17 significant digits.
void write_histogram_csv(std::ostream& os, const std::vector<double>& values, int bins);
/// CSV, one value per line.
void write_spectrum_csv(std::ostream& os, const std::vector<double>& values);
std::string format_float(double x);

/// The compression by 1 (x) g_3: rows/columns {2,6,7} (1-based).
struct Compression {
  std::array<Mat, 3> x;              // compressed X1, X2, X3 (3N x 3N)
  Mat unitary;                       // compressed u (x) 1
  std::array<CycloNum, 3> unitary_diag;  // its exact diagonal scalars
};
Compression compress_by_g3(const Model& m);

}  // namespace cplab::rmt
