#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dppcore/kernels.hpp"

namespace dppcore {

class CoresetSampler;

inline constexpr Index kMaxOracleSize = 12;
inline constexpr double kOracleClipTol = 1e-10;

/// Law of the random subset of a DPP on n <= 12 points, one atom per bitmask.
class SubsetDistribution {
 public:
  SubsetDistribution(Index n, std::vector<double> probs);

  Index size() const { return n_; }
  const std::vector<double>& probs() const { return probs_; }
  double prob(std::uint32_t mask) const { return probs_[mask]; }
  /// P(T subset of S).
  double inclusion(std::uint32_t mask) const;
  VectorXd marginals() const;
  /// E[g(S)] over all atoms.
  double expectation(const std::function<double(std::uint32_t)>& g) const;

 private:
  Index n_;
  std::vector<double> probs_;
};

/// P(S = T) = sum_{U >= T} (-1)^{|U \ T|} det K_U. Atoms above -1e-10 are
/// clipped to 0 and the table renormalized; anything lower throws
/// Error(invalid_kernel). Works for non-symmetric K.
SubsetDistribution exact_distribution(const MatrixXd& K);
SubsetDistribution exact_distribution(const KernelMatrix& K);

/// Lambda(phi) for the subset encoded by mask.
double linear_statistic(std::uint32_t mask, const VectorXd& phi);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// mean = Tr[Phi K], variance = Tr[Phi (I - K) Phi K].
Moments linstat_moments(const MatrixXd& K, const VectorXd& phi);
Moments linstat_moments(const SubsetDistribution& dist, const VectorXd& phi);

inline constexpr int kMaxCumulantOrder = 5;

/// k-th cumulant of Lambda(phi) as the sum over compositions of k of
/// Tr[Phi^{k_1} K ... Phi^{k_q} K].
double cumulant(const MatrixXd& K, const VectorXd& phi, int order);
/// Same cumulant computed from the raw moments of the table.
double cumulant(const SubsetDistribution& dist, const VectorXd& phi, int order);

/// E[exp(t Lambda(phi))] = det(I - (I - exp(t Phi)) K).
double laplace_transform(const MatrixXd& K, const VectorXd& phi, double t);
double laplace_transform(const SubsetDistribution& dist, const VectorXd& phi, double t);

/// P(|Lambda(phi) - E Lambda(phi)| >= eps).
double two_sided_tail(const SubsetDistribution& dist, const VectorXd& phi, double eps);
/// P(||Lambda(Phi) - E Lambda(Phi)||_w >= eps) for the columns of Phi (n x p).
double weighted_norm_tail(const SubsetDistribution& dist, const MatrixXd& Phi,
                          const VectorXd& weights, double eps);

/// Law of |S| from the kernel eigenvalues (sum of independent Bernoullis).
VectorXd cardinality_distribution(std::span<const double> eigenvalues);
/// P(|S| > threshold).
double cardinality_tail(std::span<const double> eigenvalues, double threshold);
/// exp(-B^2 m / (B + 2)), a bound on P(|S| > (B + 1) m) when E|S| = m.
double cardinality_tail_bound(double mean, double B);

/// PSD square root by eigendecomposition with eigenvalues clipped at 0.
MatrixXd psd_sqrt(const MatrixXd& A);

struct HilbertSchmidtCheck {
  double lhs = 0.0;  // ||sqrt(I-K) Phi^k sqrt(K)||_HS
  double rhs = 0.0;  // k ||phi||_inf^{k-1} ||sqrt(I-K) Phi sqrt(K)||_HS
  bool holds(double rel_tol = 1e-10) const { return lhs <= rhs * (1.0 + rel_tol) + 1e-14; }
};

HilbertSchmidtCheck hilbert_schmidt_check(const MatrixXd& K, const VectorXd& phi, int k);

enum class Verdict { holds, violated, out_of_range, not_checked };
const char* to_string(Verdict v);

struct TailEntry {
  double epsilon = 0.0;
  double bound = 0.0;
  double range_limit = 0.0;
  bool in_range = true;
  std::optional<double> empirical;
  Verdict verdict = Verdict::not_checked;
};

struct BoundParams {
  double A = 1.0;
  double C = 1.0;   // parametrized-regime constant
  double rho = 1.0;
  double c = 1.0;
  double D = 1.0;
  double ell = 1.0;
  double B = 1.0;
  double diameter = 1.0;
  double V = 1.0;
  double m = 1.0;
  double sup_norm = 1.0;  // sup over the family of ||f||_inf
};

enum class Regime { finite_dim, parametrized };

TailEntry bound_theorem1(double var, double sup_norm, double A, double eps);
TailEntry bound_theorem2(double var, double sup_norm, double op_norm, double nuclear_norm,
                         double eps);
TailEntry bound_theorem3(const VectorXd& variances, const VectorXd& sup_norms,
                         const VectorXd& weights, double A, double eps);
TailEntry bound_theorem4(const BoundParams& params, Regime regime, double eps);
TailEntry bound_theorem5(const BoundParams& params, Index p, double eps);

/// Constant C' of the rate display 2 exp(6D - C' eps^2 m^{1+1/d}) once
/// V = c_hat m^{-(1+1/d)} is substituted into the finite-dim bound.
double rate_constant(const BoundParams& params, double c_hat);

/// Attaches an empirical value and fills the verdict.
void judge(TailEntry& entry, double empirical);

struct TailReport {
  std::string theorem;
  Index instance = 0;
  std::vector<TailEntry> entries;
  double admissible_limit = 0.0;
  /// Smallest A for which the bound holds at every grid point of the
  /// admissible range computed with the configured A.
  std::optional<double> minimal_A;

  bool all_hold() const;
};

/// Evenly spaced grid of `points` values in (0, limit].
std::vector<double> epsilon_grid(double limit, int points);

TailReport validate_theorem1(const SubsetDistribution& dist, const VectorXd& phi, double A,
                             int grid_points, Index instance = 0);
TailReport validate_theorem2(const SubsetDistribution& dist, const VectorXd& phi,
                             double op_norm, double nuclear_norm, int grid_points,
                             Index instance = 0);
TailReport validate_theorem3(const SubsetDistribution& dist, const MatrixXd& Phi,
                             const VectorXd& weights, double A, int grid_points,
                             Index instance = 0);

void write_tail_report_csv(std::ostream& out, std::span<const TailReport> reports);

struct VariancePoint {
  Index m = 0;
  double variance = 0.0;
  double stderr_ = 0.0;
  std::optional<double> exact;
  bool dropped = false;
};

struct VarianceFit {
  std::vector<VariancePoint> points;
  double slope = 0.0;
  double slope_err = 0.0;
  double delta = 0.0;  // -slope - 1
};

struct VarianceFitOptions {
  std::vector<Index> m_grid;
  Index repeats = 200;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: default_thread_count()
};

using SamplerBuilder = std::function<std::unique_ptr<CoresetSampler>(Index m)>;

/// Monte Carlo Var[L_S(f) / n] per m and the log-log least-squares slope.
VarianceFit variance_scaling_fit(const Dataset& X, const VectorXd& f, const SamplerBuilder& build,
                                 const VarianceFitOptions& options);

}  // namespace dppcore
