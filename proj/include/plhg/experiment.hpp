#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plhg/powerlaw.hpp"
#include "plhg/sampler.hpp"
#include "plhg/stats.hpp"
#include "plhg/theory.hpp"

namespace plhg {

/// Monte Carlo sweep over an (alpha, n) grid.
struct ExperimentConfig {
  std::vector<double> alphas;
  std::vector<std::uint64_t> ns;  // strictly increasing, >= 4 points
  std::uint32_t reps = 1;
  int m = 3;
  double tau = 1.0;
  /// Body, x0 and (UniformBody) lambda; alpha is overridden per cell.
  PowerLawParams params_template = PowerLawParams::pure_pareto(2.0);
  std::uint64_t master_seed = 0;
  SamplerMethod method = SamplerMethod::Skip;
  std::vector<Statistic> statistics{Statistic::Edges};
  /// When false wall_ms is written as 0 so output is byte-reproducible.
  bool record_timing = true;

  void validate() const;
  bool wants(Statistic statistic) const;
  PowerLawParams params_for(double alpha) const {
    return params_template.with_alpha(alpha);
  }
};

struct StatRecord {
  double alpha = 0.0;
  std::uint64_t n = 0;
  std::uint32_t rep = 0;
  std::uint64_t seed = 0;
  std::uint64_t edge_count = 0;
  std::optional<Count> loose2_count;
  double wall_ms = 0.0;
  bool outside_tau_regime = false;
};

/// Seed of replication `rep` in cell (alpha_index, n_index).
std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t alpha_index,
                        std::size_t n_index, std::uint32_t rep);

/// One record per (alpha, n, rep), sorted by (alpha index, n index, rep).
/// Each replication samples fresh weights and a fresh hypergraph from its
/// derived seed and counts statistics exactly while streaming edges.
/// Output is independent of `workers`.
std::vector<StatRecord> run_experiment(const ExperimentConfig& config,
                                       unsigned workers = 1);

/// Replicates one record from its seed; used by run_experiment.
StatRecord run_replication(const ExperimentConfig& config, double alpha,
                           std::uint64_t n, std::uint32_t rep,
                           std::uint64_t seed);

struct GridPoint {
  double n;
  double value;
};

enum class SlopeMethod { OLS, PairwiseRatio };
const char* to_string(SlopeMethod method);

struct SlopeEstimate {
  double n_exponent_hat = 0.0;
  double std_error = 0.0;
  double log_exponent_assumed = 0.0;
  SlopeMethod method = SlopeMethod::PairwiseRatio;
};

/// Fits S(n) ~ C n^a (log n)^b for a with b held fixed.
/// OLS: regress log S - b log log n on log n.
/// PairwiseRatio: mean over consecutive grid steps of
///   (log S_{j+1} - log S_j - b (log log n_{j+1} - log log n_j))
///     / (log n_{j+1} - log n_j)
/// with the standard error of that mean.
/// Needs >= 4 points, all values > 0, and n > 1 when b != 0.
SlopeEstimate fit_slope(std::span<const GridPoint> points,
                        double log_exponent_assumed, SlopeMethod method);

/// Replication statistics of one (alpha, n) cell.
struct CellSummary {
  double alpha = 0.0;
  std::uint64_t n = 0;
  std::size_t count = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double median = 0.0;
  double rel_std = 0.0;  // sample standard deviation / mean
};

/// Cells in (alpha, n) order. Loose2 requires every record to carry it.
std::vector<CellSummary> summarize(std::span<const StatRecord> records,
                                   Statistic statistic);

/// Pass/fail thresholds for the fitted exponent and constant.
struct Tolerance {
  double exponent;
  /// Relative tolerance (alpha > 1) or multiplicative factor (alpha < 1);
  /// absent where no constant is predicted.
  std::optional<double> constant_rel;
  std::optional<double> constant_factor;
};
Tolerance tolerance_for(Statistic statistic, double alpha, double tau);

struct ComparisonRow {
  double alpha = 0.0;
  Statistic statistic = Statistic::Edges;
  double predicted_n_exponent = 0.0;
  double log_exponent = 0.0;
  SlopeEstimate pairwise;
  SlopeEstimate ols;
  std::optional<double> predicted_constant;
  /// S(n_max) / (n_max^a (log n_max)^b) with the predicted (a, b), using the
  /// same normalization as the predicted constant.
  std::optional<double> fitted_constant;
  double exponent_tolerance = 0.0;
  bool exponent_pass = false;
  std::optional<bool> constant_pass;
  /// Loose 2-cycles, alpha > 2: every cell mean lies below the exposed
  /// upper bound 6 C(n,4) E(W)^2 E(W^2)^2 / n^2.
  std::optional<bool> upper_bound_pass;
  bool pass() const {
    return exponent_pass && constant_pass.value_or(true) &&
           upper_bound_pass.value_or(true);
  }
};

/// One row per alpha present in `records`. Means are taken per cell before
/// fitting; the verdict uses the PairwiseRatio estimate.
std::vector<ComparisonRow> compare_to_theory(
    std::span<const StatRecord> records, const PowerLawParams& params_template,
    Statistic statistic, int m, double tau);

/// Erdos-Renyi contrast at a fixed alpha (m = 3).
struct ErConfig {
  std::vector<std::uint64_t> ns;
  std::uint32_t reps = 200;
  /// Multiplier on the calibrated density p = c * mean|E(H)| / C(n,3).
  double c = 1.0;
  double alpha = 1.0;
  PowerLawParams params_template = PowerLawParams::pure_pareto(1.0);
  std::uint64_t master_seed = 0;
  SamplerMethod method = SamplerMethod::Skip;

  void validate() const;
};

struct ErComparisonRow {
  std::uint64_t n = 0;
  double p = 0.0;
  CellSummary h_edges, g_edges, h_loose2, g_loose2;
  double g_loose2_expected = 0.0;  // 6 C(n,4) p^2
  double ratio = 0.0;              // mean loose2 H / mean loose2 G
  bool edges_matched = false;      // |mean G - c mean H| <= 3 combined stderr
};

struct ErComparisonReport {
  std::vector<ErComparisonRow> rows;
  SlopeEstimate h_slope;  // PairwiseRatio, b from theory (alpha = 1: b = 2)
  SlopeEstimate g_slope;  // PairwiseRatio, b = 6
  bool ratio_increasing = false;
  bool edges_matched = false;
  bool pass() const { return ratio_increasing && edges_matched; }
};

ErComparisonReport er_comparison(const ErConfig& config, unsigned workers = 1);

// CSV artifacts. Floats use 17 significant digits.
inline constexpr const char* kRecordsHeader =
    "alpha,n,m,tau,rep,seed,edge_count,loose2_count,wall_ms";

void write_records_csv(std::ostream& out, std::span<const StatRecord> records,
                       int m, double tau);
/// Returns records plus the (m, tau) found in the file.
struct RecordsFile {
  std::vector<StatRecord> records;
  int m = 0;
  double tau = 1.0;
};
RecordsFile read_records_csv(std::istream& in);

void write_report_csv(std::ostream& out, std::span<const ComparisonRow> rows);
void write_slopes_csv(std::ostream& out, std::span<const ComparisonRow> rows);
void write_cells_csv(std::ostream& out, std::span<const CellSummary> cells,
                     Statistic statistic);
void write_er_report_csv(std::ostream& out, const ErComparisonReport& report);
void write_er_slopes_csv(std::ostream& out, const ErComparisonReport& report);

/// Formats with 17 significant digits ("%.17g").
std::string format_double(double value);

}  // namespace plhg
