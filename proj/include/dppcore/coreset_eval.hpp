#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dppcore/data.hpp"
#include "dppcore/samplers.hpp"

namespace dppcore {

struct KMeansQuery {
  MatrixXd centers;  // k x d
};

/// (a^T y + b - z)^2 for a point x = (y, z).
struct LinRegQuery {
  VectorXd a;
  double b = 0.0;
};

/// Explicit value per dataset index.
struct TableQuery {
  VectorXd values;
};

using ScalarQuery = std::variant<KMeansQuery, LinRegQuery, TableQuery>;

/// p scalar queries evaluated jointly.
struct VectorQuery {
  std::vector<ScalarQuery> components;
};

using QueryFamily = std::variant<KMeansQuery, LinRegQuery, TableQuery, VectorQuery>;

/// Value of a scalar query at point index i of X.
double query_eval(const ScalarQuery& f, const Dataset& X, Index i);
/// Value at a free point (kmeans and linreg only).
double query_eval(const ScalarQuery& f, const Eigen::Ref<const VectorXd>& x);

/// sum_x mu(x) f(x).
double loss_total(const Dataset& X, const ScalarQuery& f);
/// sum_{x in S} omega(x) mu(x) f(x).
double loss_coreset(const Coreset& S, const Dataset& X, const ScalarQuery& f);

inline constexpr double kNegligibleLoss = 1e-12;

struct QueryError {
  double multiplicative = 0.0;  // |L_S / L - 1|; 0 and flagged when excluded
  double additive = 0.0;        // |L_S - L| / n
  bool excluded = false;        // |L| / n below kNegligibleLoss
};

struct ErrorReport {
  std::vector<QueryError> per_query;
  double sup_multiplicative = 0.0;  // over non-excluded queries
  double sup_additive = 0.0;
  Index excluded = 0;
};

ErrorReport sup_relative_error(const Coreset& S, const Dataset& X,
                               std::span<const ScalarQuery> batch);

/// `count` k-means queries, each with k distinct centers drawn uniformly
/// from the rows of X.
std::vector<ScalarQuery> sample_query_batch(const Dataset& X, Index k, Index count,
                                            std::uint64_t seed);

struct VectorLoss {
  VectorXd coreset;   // L_S(f_i)
  VectorXd total;     // L(f_i)
  double deviation;   // ||L_S - L||_w / n
};

VectorLoss vector_loss(const Coreset& S, const Dataset& X, const VectorQuery& F,
                       const VectorXd& norm_weights);

struct ErrorRow {
  std::string sampler;
  Index m = 0;
  Index repeat = 0;
  Index query_id = 0;
  double multiplicative = 0.0;
  double additive = 0.0;
};

void write_error_rows_csv(std::ostream& out, std::span<const ErrorRow> rows);

}  // namespace dppcore
