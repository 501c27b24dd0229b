#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dppcore {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Ground set: n points (rows) in d dimensions with nonnegative weights mu.
struct Dataset {
  MatrixXd points;
  VectorXd weights;
  std::string label;

  Index size() const { return points.rows(); }
  Index dim() const { return points.cols(); }

  static Dataset from_points(MatrixXd points, std::string label = {});
};

void validate(const Dataset& X);

Dataset gen_uniform(Index n, Index d, std::uint64_t seed);

struct TrimodalParams {
  MatrixXd centers;  // 3 x d
  double stddev = 0.15;
};

/// Mixture parameters used by gen_trimodal for dimension d.
TrimodalParams trimodal_params(Index d);

/// Equal-weight mixture of three isotropic Gaussians inside [-1,1]^d. Point i
/// belongs to component i % 3; draws outside the cube are redrawn.
Dataset gen_trimodal(Index n, Index d, std::uint64_t seed);

struct CsvOptions {
  bool has_weights = false;
};

Dataset parse_csv(std::istream& in, const CsvOptions& opts = {},
                  const std::string& label = "csv");
Dataset load_csv(const std::string& path, const CsvOptions& opts = {});

struct PcaResult {
  Dataset projected;
  VectorXd explained_variance_ratio;  // length d_out, descending
  MatrixXd components;                // d x d_out
};

PcaResult pca(const Dataset& X, Index d_out);
Dataset pca_project(const Dataset& X, Index d_out);

inline constexpr double kDefaultRescaleMargin = 1e-3;

/// Per-coordinate affine map onto [-(1-margin), 1-margin]; constant
/// coordinates map to 0.
Dataset rescale_to_cube(const Dataset& X, double margin = kDefaultRescaleMargin);

struct BetaParams {
  double alpha = 1.0;
  double beta = 1.0;
  bool fallback = false;  // fit failed; (1,1) substituted
};

enum class DensityKind { kde_epanechnikov, beta_product };

/// Density on [-1,1]^d: either a product Epanechnikov KDE or a product of
/// univariate beta pdfs mapped from [0,1].
class DensityModel {
 public:
  static DensityModel kde(const MatrixXd& points, VectorXd bandwidths);
  static DensityModel beta_product(std::vector<BetaParams> params);
  static DensityModel uniform(Index d);

  DensityKind kind() const { return kind_; }
  Index dim() const { return dim_; }
  const VectorXd& bandwidths() const { return bandwidths_; }
  const std::vector<BetaParams>& beta_params() const { return beta_; }
  double floor() const { return floor_; }
  bool any_fallback() const;

  double operator()(const Eigen::Ref<const VectorXd>& x) const;
  VectorXd evaluate(const MatrixXd& rows) const;

  /// Univariate marginal density of coordinate j (beta-product only).
  double marginal(Index j, double x) const;

 private:
  DensityKind kind_ = DensityKind::beta_product;
  Index dim_ = 0;
  // KDE state: points sorted along coordinate 0 for windowed evaluation.
  MatrixXd sorted_points_;
  std::vector<double> first_coord_;
  VectorXd bandwidths_;
  double floor_ = 0.0;
  std::vector<BetaParams> beta_;
  std::vector<double> log_norm_;
};

/// Product Epanechnikov KDE with Scott bandwidths h_j = sd_j n^{-1/(d+4)}.
DensityModel kde_fit(const Dataset& X);
double kde_eval(const DensityModel& model, const Eigen::Ref<const VectorXd>& x);

/// Method-of-moments beta fit from the mean/variance of a coordinate
/// expressed on [-1,1]. Throws Error(fit) when alpha or beta <= 0.
BetaParams beta_from_moments(double mean, double variance);

enum class FitPolicy { strict, fallback };

/// Per-coordinate beta fit. Under FitPolicy::fallback a failed coordinate
/// becomes Beta(1,1) with its fallback flag set.
DensityModel fit_beta_reference(const Dataset& X, FitPolicy policy = FitPolicy::strict);

}  // namespace dppcore
