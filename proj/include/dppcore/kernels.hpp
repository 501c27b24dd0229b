#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dppcore/data.hpp"

namespace dppcore {

/// Eigenpairs sorted by descending eigenvalue. For kernels built from a
/// basis, only the range is stored: columns beyond eigenvectors.cols() are
/// zero-eigenvalue directions.
struct SpectralForm {
  VectorXd eigenvalues;
  MatrixXd eigenvectors;

  Index size() const { return eigenvectors.rows(); }
};

inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kSpectrumTol = 1e-8;

/// Correlation kernel K of a DPP on a finite ground set (counting measure).
class KernelMatrix {
 public:
  /// Hermitian kernel; validates 0 <= K <= I up to kSpectrumTol, clips
  /// eigenvalues into [0,1] and caches the spectrum.
  static KernelMatrix hermitian(MatrixXd K);

  /// Hermitian kernel from a precomputed spectrum (eigenvalues in [0,1]).
  /// With materialize, the dense entries are formed once and stored.
  static KernelMatrix from_spectrum(SpectralForm spectrum, bool materialize = false);

  /// Orthogonal projection onto the span of the orthonormal columns of U.
  static KernelMatrix projection(MatrixXd U, std::vector<std::string> warnings = {});

  /// Arbitrary (possibly non-symmetric) kernel; no spectrum is cached.
  static KernelMatrix general(MatrixXd K);

  Index size() const { return n_; }
  bool is_hermitian() const { return hermitian_; }
  bool is_projection() const { return projection_; }
  /// Projection rank, or the rounded trace for non-projections.
  Index rank() const;
  double trace() const;

  const SpectralForm* spectrum() const { return spectrum_ ? &*spectrum_ : nullptr; }
  MatrixXd entries() const;
  VectorXd diagonal() const;
  MatrixXd submatrix(std::span<const Index> rows) const;
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  Index n_ = 0;
  bool hermitian_ = false;
  bool projection_ = false;
  std::optional<MatrixXd> dense_;
  std::optional<SpectralForm> spectrum_;
  std::vector<std::string> warnings_;
};

/// Hermitian eigendecomposition, descending order.
SpectralForm symmetric_spectrum(const MatrixXd& A);

/// L_ij = exp(-|x_i - x_j|^2 / (2 h^2)).
MatrixXd gaussian_lensemble(const Dataset& X, double h);

/// Spectrum of an L-ensemble matrix: symmetric PSD check, tiny negative
/// eigenvalues clipped to 0.
SpectralForm lensemble_spectrum(const MatrixXd& L);

/// K = L (I + L)^{-1} through the spectral map lambda -> lambda / (1 + lambda).
KernelMatrix lensemble_to_correlation(const MatrixXd& L);

struct OpeKernelInfo {
  Index requested_rank = 0;
  Index rank = 0;
  double smallest_ratio = 0.0;  // smallest kept / largest singular value
  double rho_hat = 0.0;         // n min_i K_ii / rank
};

/// Discretized multivariate OPE kernel: projection onto the top-m left
/// singular vectors of F_ik = sqrt(q(x_i)/gamma(x_i)) p_k(x_i), the p_k
/// orthonormal for q in graded lexical order.
KernelMatrix build_discretized_ope_kernel(const Dataset& X, const DensityModel& q,
                                          const DensityModel& gamma, Index m,
                                          OpeKernelInfo* info = nullptr);

/// Projection onto the span of the first m graded polynomials evaluated on
/// X (the OPE of the empirical measure). Dependent columns are dropped with
/// a warning.
KernelMatrix vdm_projection_kernel(const Dataset& X, Index m);

/// e_0..e_{k_max} of lambda by the column recurrence, after rescaling by
/// max lambda.
VectorXd elementary_symmetric(std::span<const double> lambda, Index k_max);

/// Log-domain prefix table: at(r, k) = log e_k(lambda_0 .. lambda_{r-1}).
class LogEsTable {
 public:
  LogEsTable(std::span<const double> lambda, Index k_max);

  Index size() const { return n_; }
  Index k_max() const { return k_max_; }
  double at(Index r, Index k) const { return table_[r * (k_max_ + 1) + k]; }

 private:
  Index n_;
  Index k_max_;
  std::vector<double> table_;
};

double log_add_exp(double a, double b);

/// Eigenvalues at or below n * machine epsilon * max |lambda| are
/// indistinguishable from zero; the m-DPP routines treat them as zero.
double positivity_threshold(const VectorXd& lambda);
VectorXd effective_spectrum(const VectorXd& lambda);
/// Number of eigenvalues above positivity_threshold.
Index positive_count(const VectorXd& lambda);

/// Inclusion probabilities of the m-DPP with likelihood spectrum L.
VectorXd mdpp_marginals(const SpectralForm& L, Index m);

struct NonsymmetricSpec {
  double skew_scale = 0.5;  // tau
};

struct NonsymmetricKernel {
  KernelMatrix kernel;
  MatrixXd likelihood;
  double op_norm = 0.0;
  double nuclear_norm = 0.0;
  int attempts = 1;
};

/// K = L (I + L)^{-1} with L = G G^T / n + tau (H - H^T) / 2, certified by
/// the exact subset distribution (n <= 12).
NonsymmetricKernel build_nonsymmetric_kernel(Index n, const NonsymmetricSpec& spec,
                                             std::uint64_t seed);

/// Row-major binary dump: int64 n, uint8 hermitian, uint8 projection,
/// int64 rank, then n*n doubles.
void write_kernel(std::ostream& out, const KernelMatrix& K);
KernelMatrix read_kernel(std::istream& in);

}  // namespace dppcore
