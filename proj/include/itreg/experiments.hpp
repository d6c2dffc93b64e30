#pragma once

#include <itreg/solvers.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace itreg {

struct MethodSpec {
  Method method = Method::nesterov;
  double beta = 4.0;
  double nu = 1.0;
  std::string label() const;
};

struct StopSpec {
  StoppingRule::Kind kind = StoppingRule::Kind::oracle;
  double tau = 1.01;
  double mu = 0.75;
  double C = 1.0;
  StoppingRule rule() const;
  std::string label() const;
};

struct ProblemSpec {
  enum class Kind { diagonal, bvp };
  Kind kind = Kind::diagonal;
  // diagonal
  int n_max = 1000;
  double spectrum_exponent = 2.0;
  double solution_exponent = 4.0;
  bool alternating = true;
  // bvp
  int grid_size = 200;
  int example_id = 1;
  /// Interpret configured deltas relative to ||y_exact|| (the BVP studies
  /// report relative noise levels).
  bool relative_delta = false;
};

struct RateExperimentConfig {
  ProblemSpec problem;
  std::vector<MethodSpec> methods;
  StopSpec stop;
  std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  std::vector<std::uint64_t> seeds{1};
  long max_iterations = 0;  // 0 = per-method default
  std::string output_dir;   // empty = no files written
  bool gnuplot = false;
  int jobs = 1;
};

struct CellResult {
  std::string method;
  double delta = 0.0;       // as configured (relative when requested)
  double delta_abs = 0.0;   // absolute noise handed to add_noise
  std::uint64_t seed = 0;
  double error = 0.0;       // ||x_stop - x_true||
  long stop_k = 0;
  SolveStatus status = SolveStatus::stopped;
  double trace_min_error = 0.0;  // min error over the scanned trace
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  int n_points = 0;
  bool valid = false;
};

struct RateSeries {
  std::vector<CellResult> cells;  // ordered by (method, delta, seed)
  /// method -> (delta, median error) over deltas where every seed
  /// terminated normally.
  std::map<std::string, std::vector<std::pair<double, double>>> median_error;
  std::map<std::string, std::vector<std::pair<double, double>>> median_stop_k;
  std::map<std::string, SlopeFit> slopes;
};

/// Least-squares line through (log delta, log value). Throws
/// std::invalid_argument for fewer than two points or non-positive
/// coordinates.
SlopeFit fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

/// Runs the (method x delta x seed) grid, aggregates median errors, fits
/// log-log slopes, and writes rates.csv / slopes.csv to output_dir when set.
RateSeries run_rate_experiment(const RateExperimentConfig& config);

/// Same grid as run_rate_experiment (oracle stopping) for a deliberately
/// undersized (beta, nu) pair; the slope ordering
/// slope(landweber) >= slope(nesterov) >= slope(nu-method) is evaluated
/// through semisat_ordering on the result.
RateSeries run_semisaturation_experiment(const RateExperimentConfig& config);

struct SemisatOrdering {
  double slope_landweber = 0.0;
  double slope_nesterov = 0.0;
  double slope_nu = 0.0;
  bool ok(double tol) const {
    return slope_landweber - slope_nesterov >= -tol &&
           slope_nesterov - slope_nu >= -tol;
  }
};
SemisatOrdering semisat_ordering(const RateSeries& series);

struct TablesConfig {
  ProblemSpec problem;
  double beta = 4.0;  // nesterov
  double nu = 1.0;    // nu-method
  double tau = 1.01;  // discrepancy
  std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  std::vector<std::uint64_t> seeds{1};
  long max_iterations = 0;
  std::string output_dir;
  int jobs = 1;
};

/// Method x stopping-rule comparison on a shared noise realization per
/// (delta, seed): error ratios relative to Nesterov at the oracle index and
/// iteration counts, medians across seeds. Failed cells are NaN (written as
/// NA). Columns are ordered by increasing delta.
struct TableRecords {
  std::vector<std::string> row_labels;  // "method/stopping"
  std::vector<double> deltas;
  Matrix ratios;  // rows x deltas
  Matrix counts;
};
TableRecords run_comparison_tables(const TablesConfig& config);

struct BvpRatesConfig {
  std::vector<int> examples{1, 2, 3};
  int grid_size = 200;
  double tau = 1.1;
  double suboptimal_beta = 1.0;
  std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};  // relative
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  long max_iterations = 0;
  std::string output_dir;
  int jobs = 1;
};

/// Optimal-order beta used in the BVP studies: 3.5 for examples 1 and 2,
/// 9.5 for example 3.
double bvp_optimal_beta(int example_id);

struct BvpRateRecord {
  int example_id = 0;
  double mu = 0.0;
  double beta = 0.0;
  double optimal_slope = 0.0;  // 2 mu / (2 mu + 1)
  RateSeries series;
};

/// Nesterov with discrepancy stopping on the BVP examples, for the
/// per-example optimal beta and the suboptimal beta = 1 variant.
std::vector<BvpRateRecord> run_bvp_rates(const BvpRatesConfig& config);

/// Deterministic CSV helpers shared by the experiment drivers and the CLI.
std::string format_double(double v);
void write_rates_csv(const std::string& path, const RateSeries& series);
void write_slopes_csv(const std::string& path, const RateSeries& series);
void write_tables_csv(const std::string& dir, const TableRecords& records);

}  // namespace itreg
