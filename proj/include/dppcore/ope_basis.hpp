#pragma once

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <vector>

#include "dppcore/data.hpp"

namespace dppcore {

using MultiIndex = std::vector<int>;

/// The first m multi-indices of N^d in graded lexical order: total degree
/// first, ties broken lexicographically with k_1 most significant.
class MultiIndexSet {
 public:
  MultiIndexSet(Index d, std::vector<MultiIndex> indices);

  Index dim() const { return d_; }
  Index size() const { return static_cast<Index>(indices_.size()); }
  const MultiIndex& operator[](Index k) const { return indices_[k]; }
  const std::vector<MultiIndex>& indices() const { return indices_; }

  /// Largest exponent used in coordinate j.
  int max_degree(Index j) const;
  int max_degree() const;

 private:
  Index d_;
  std::vector<MultiIndex> indices_;
};

MultiIndexSet graded_multiindices(Index d, Index m);

inline constexpr int kStieltjesDegreeCap = 40;
inline constexpr int kJacobiDegreeCap = 2048;
inline constexpr int kQuadratureNodes = 200;

/// Monic three-term recurrence pi_{k+1} = (x - a_k) pi_k - b_k pi_{k-1},
/// with b_0 the total mass of the measure. evaluate() returns the
/// orthonormal polynomials p_k = pi_k / ||pi_k||.
struct Recurrence {
  VectorXd a;  // length degree_max + 1
  VectorXd b;  // length degree_max + 1

  int degree_max() const { return static_cast<int>(a.size()) - 1; }

  /// Writes p_0(x) .. p_{degree}(x) into out.
  void evaluate(double x, int degree, double* out) const;
  double evaluate(double x, int k) const;
};

/// Gauss-Legendre nodes and weights on [-1,1].
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

/// Discretized Stieltjes procedure for a density on [-1,1] using a fixed
/// 200-node Gauss-Legendre rule. Degree is capped at 40.
Recurrence stieltjes_recurrence(const std::function<double(double)>& density, int degree_max);

/// Closed-form recurrence of the Beta(alpha, beta) law mapped to [-1,1]
/// (Jacobi weight (1-x)^{beta-1} (1+x)^{alpha-1}, normalized to mass 1).
Recurrence beta_recurrence(double alpha, double beta, int degree_max);

enum class BasisKind { continuous_product, discrete_gs };

/// Orthonormal basis: either a product of univariate recurrences
/// (continuous reference density), or basis values on a dataset that are
/// orthonormal for the normalized empirical measure.
struct OrthoBasis {
  BasisKind kind = BasisKind::continuous_product;
  std::vector<Recurrence> per_dim;  // continuous_product
  MatrixXd values;                  // discrete_gs, n x m
  std::vector<Index> dropped;       // discrete_gs columns removed for rank
};

/// Product basis for a beta-product reference density, degree_max per axis.
OrthoBasis continuous_basis(const DensityModel& q, int degree_max);

/// Entry (i,k) = p_{idx[k]}(x_i). Points must lie in [-1,1]^d.
MatrixXd eval_feature_matrix(const OrthoBasis& basis, const MultiIndexSet& idx,
                             const Dataset& X);

/// Tensor Legendre features (orthonormal for the uniform law on [-1,1]^d).
MatrixXd legendre_features(const MultiIndexSet& idx, const MatrixXd& points);

enum class RankPolicy { strict, drop };

/// Gram-Schmidt of the polynomial columns of idx over X, so that
/// (1/n) Q^T Q = I. Under RankPolicy::strict a dependent column throws a
/// RankError naming it; under RankPolicy::drop it is skipped and recorded.
OrthoBasis discrete_gram_schmidt(const Dataset& X, const MultiIndexSet& idx,
                                 RankPolicy policy = RankPolicy::strict);

/// Row-major text dump with a "rows cols" header.
void write_matrix(std::ostream& out, const MatrixXd& M);
MatrixXd read_matrix(std::istream& in);

}  // namespace dppcore
