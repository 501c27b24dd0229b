#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dppcore/data.hpp"
#include "dppcore/kernels.hpp"
#include "dppcore/rng.hpp"

namespace dppcore {

/// Weighted subset of the dataset; weights are 1 / P(x in S).
struct Coreset {
  std::vector<Index> indices;  // sorted, distinct
  std::vector<double> weights;
  std::string sampler;
  std::uint64_t seed = 0;

  Index size() const { return static_cast<Index>(indices.size()); }
};

void write_coreset_csv(std::ostream& out, const Coreset& S);
Coreset read_coreset_csv(std::istream& in);

struct InclusionWeights {
  VectorXd weights;  // +inf where the marginal is 0
  double rho_hat = 0.0;
};

/// omega_i = 1 / marginal_i and rho_hat = n min_{marginal > 0} marginal / m.
InclusionWeights inclusion_weights(const VectorXd& marginals, double expected_size);

/// Sequential sampler for projection DPPs given orthonormal columns V.
/// Reuses its buffers between draws; one instance per thread.
class ProjectionSampler {
 public:
  /// Appends the sampled indices (unsorted) to out.
  void sample(const MatrixXd& V, Rng& rng, std::vector<Index>& out);

 private:
  std::vector<double> residual_;
  MatrixXd basis_;
  VectorXd work_;
  VectorXd column_;
};

Coreset sample_dpp(const KernelMatrix& K, std::uint64_t seed);
Coreset sample_mdpp(const SpectralForm& L, Index m, std::uint64_t seed);
Coreset sample_iid_uniform(const Dataset& X, Index m, std::uint64_t seed);
Coreset sample_sensitivity(const Dataset& X, Index m, Index k, std::uint64_t seed);
Coreset sample_stratified(const Dataset& X, Index m, std::uint64_t seed);

/// Instrumental law q(x) = 1/(2n) + d(x,B)^2 / (2 sum_y d(y,B)^2), with B a
/// k-means++ seeding of X; uniform when every point coincides with B.
VectorXd sensitivity_distribution(const Dataset& X, Index k, Rng& rng);

/// k-means++ seeding: indices of the k chosen centers.
std::vector<Index> kmeanspp_seeding(const Dataset& X, Index k, Rng& rng);

/// A sampler prepared for one dataset and one coreset size. draw() is const
/// and safe to call concurrently.
class CoresetSampler {
 public:
  virtual ~CoresetSampler() = default;

  virtual std::string tag() const = 0;
  virtual Coreset draw(std::uint64_t seed) const = 0;
  /// Exact inclusion probabilities when the sampler has closed-form ones.
  virtual std::optional<VectorXd> marginals() const { return std::nullopt; }
  /// Exact variance of sum_{x in S} omega(x) phi(x), when available.
  virtual std::optional<double> exact_variance(const VectorXd&) const { return std::nullopt; }
};

class DppSampler final : public CoresetSampler {
 public:
  DppSampler(KernelMatrix K, std::string tag);

  std::string tag() const override { return tag_; }
  Coreset draw(std::uint64_t seed) const override;
  std::optional<VectorXd> marginals() const override { return diag_; }
  std::optional<double> exact_variance(const VectorXd& phi) const override;
  const KernelMatrix& kernel() const { return K_; }

 private:
  KernelMatrix K_;
  VectorXd diag_;
  std::string tag_;
};

class MdppSampler final : public CoresetSampler {
 public:
  MdppSampler(SpectralForm L, Index m, std::string tag);

  std::string tag() const override { return tag_; }
  Coreset draw(std::uint64_t seed) const override;
  std::optional<VectorXd> marginals() const override { return marginals_; }

  /// Phase one: indices of the m eigenvectors, chosen with probability
  /// proportional to the product of their eigenvalues.
  std::vector<Index> select_eigenvectors(Rng& rng) const;

 private:
  SpectralForm L_;
  Index m_;
  LogEsTable prefix_;
  VectorXd marginals_;
  std::string tag_;
};

class UniformSampler final : public CoresetSampler {
 public:
  UniformSampler(Index n, Index m);

  std::string tag() const override { return "iid-uniform"; }
  Coreset draw(std::uint64_t seed) const override;
  std::optional<VectorXd> marginals() const override;
  std::optional<double> exact_variance(const VectorXd& phi) const override;

 private:
  Index n_, m_;
};

class SensitivitySampler final : public CoresetSampler {
 public:
  SensitivitySampler(const Dataset& X, Index m, Index k);

  std::string tag() const override { return "sensitivity"; }
  Coreset draw(std::uint64_t seed) const override;

 private:
  const Dataset* X_;
  Index m_, k_;
};

class StratifiedSampler final : public CoresetSampler {
 public:
  StratifiedSampler(const Dataset& X, Index m);

  std::string tag() const override { return "stratified"; }
  Coreset draw(std::uint64_t seed) const override;
  std::optional<VectorXd> marginals() const override;
  std::optional<double> exact_variance(const VectorXd& phi) const override;

  Index grid_size() const { return grid_; }

 private:
  Index n_;
  Index grid_;
  std::vector<std::vector<Index>> bins_;
};

/// Grid bin of a point of [-1,1]^d for a g^d grid (row-major bin id).
Index stratum_of(const Eigen::Ref<const VectorXd>& x, Index g);

enum class SamplerKind { iid_uniform, sensitivity, gmdpp, ope, vdm, stratified };

SamplerKind parse_sampler_kind(std::string_view name);
std::string_view sampler_kind_name(SamplerKind kind);

enum class ReferenceKind { beta, uniform };
enum class GammaKind { kde, reference };

struct SamplerSpec {
  SamplerKind kind = SamplerKind::iid_uniform;
  double h = 0.1;                              // G-mDPP bandwidth
  Index k = 3;                                 // sensitivity bicriteria size
  ReferenceKind reference = ReferenceKind::beta;  // OPE q
  GammaKind gamma = GammaKind::kde;               // OPE gamma-tilde

  /// Unique label; G-mDPP carries its bandwidth.
  std::string tag() const;
};

/// Per-dataset preparation shared by all coreset sizes of one sampler
/// (densities for the OPE, the L-ensemble spectrum for G-mDPP).
class SamplerFactory {
 public:
  SamplerFactory(const Dataset& X, SamplerSpec spec);

  const SamplerSpec& spec() const { return spec_; }
  std::unique_ptr<CoresetSampler> make(Index m) const;
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  const Dataset* X_;
  SamplerSpec spec_;
  std::optional<DensityModel> q_, gamma_;
  std::optional<SpectralForm> lspec_;
  std::vector<std::string> notes_;
};

}  // namespace dppcore
