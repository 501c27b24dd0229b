#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dppcore/coreset_eval.hpp"
#include "dppcore/samplers.hpp"

namespace dppcore {

struct DatasetSpec {
  std::string generator = "uniform";  // uniform | trimodal | csv
  Index n = 1024;
  Index d = 2;
  std::string path;
  bool has_weights = false;
  bool rescale = true;
  Index pca_dim = 0;  // 0: no projection
  std::uint64_t seed = 1;
};

struct ExperimentConfig {
  DatasetSpec dataset;
  Index k = 3;
  Index query_batch = 100;
  Index repeats = 100;
  double level = 0.9;
  std::vector<Index> m_grid{16, 32, 64, 128, 256};
  std::vector<SamplerSpec> samplers;
  std::uint64_t seed = 0;
  std::string outdir = "out";
  bool fixed_query_batch = false;
  unsigned threads = 0;  // 0: default_thread_count()
};

/// `key = value` lines, `#` comments, `[sampler.NAME]` sections. Unknown
/// keys raise Error(usage) naming the valid ones; malformed values raise
/// ParseError with the line number.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);
void validate(const ExperimentConfig& config, Index n);

/// Generates or loads the dataset, then PCA and cube rescaling as configured.
Dataset load_dataset(const DatasetSpec& spec);

struct QuantileEstimate {
  double quantile = 0.0;
  double ci = 0.0;  // bootstrap half-width
};

/// Order statistic at 1-based index ceil(level N), and the half-width of the
/// central 95% interval of 500 bootstrap replicates.
QuantileEstimate estimate_quantile(std::span<const double> values, double level,
                                   std::uint64_t seed = 0, int resamples = 500);

struct CurvePoint {
  Index m = 0;
  double quantile = 0.0;
  double ci = 0.0;
};

struct SlopeFit {
  double slope = 0.0;
  double stderr_ = 0.0;
  Index used = 0;
  Index dropped = 0;
  bool valid = false;  // >= 3 positive points
};

SlopeFit fit_loglog_slope(std::span<const CurvePoint> points);

struct QuantileCurve {
  std::string sampler;
  std::vector<CurvePoint> points;
  double slope = 0.0;
  double slope_err = 0.0;
  bool slope_valid = false;
  std::vector<std::string> notes;
};

struct BenchmarkResult {
  std::vector<QuantileCurve> curves;
  std::vector<ErrorRow> raw;
};

BenchmarkResult run_benchmark(const ExperimentConfig& config, const Dataset& X);

/// curves.csv, raw.csv and plot.gp under outdir.
void emit_outputs(const BenchmarkResult& result, const std::filesystem::path& outdir);
void write_curves_csv(std::ostream& out, std::span<const QuantileCurve> curves);
std::vector<QuantileCurve> read_curves_csv(std::istream& in);
void write_plot_script(std::ostream& out, std::span<const QuantileCurve> curves);

}  // namespace dppcore
