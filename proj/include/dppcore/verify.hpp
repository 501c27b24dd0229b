#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dppcore/kernels.hpp"
#include "dppcore/rng.hpp"

namespace dppcore {

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix, sign-fixed).
MatrixXd random_orthogonal(Index n, Rng& rng);
/// Q diag(u) Q^T with u_i ~ U(0,1).
MatrixXd random_hermitian_kernel(Index n, Rng& rng);
/// Projection onto a random rank-r subspace.
MatrixXd random_projection_kernel(Index n, Index rank, Rng& rng);
/// G G^T / n with G an n x n Gaussian matrix.
MatrixXd random_psd_matrix(Index n, Rng& rng);

/// Marginals of the m-DPP with likelihood L by enumerating all m-subsets.
VectorXd mdpp_marginals_by_enumeration(const MatrixXd& L, Index m);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Built-in oracle batteries: dpp, mdpp, concentration, lemmas.
SuiteResult run_verify_suite(std::string_view suite, std::uint64_t seed);

}  // namespace dppcore
