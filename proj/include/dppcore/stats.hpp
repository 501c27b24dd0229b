#pragma once

#include <span>

namespace dppcore {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

/// Ordinary least squares y = intercept + slope * x. Needs >= 2 points;
/// the standard error is 0 with exactly 2.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Inverse of the standard normal CDF, p in (0,1).
double normal_quantile(double p);

}  // namespace dppcore
