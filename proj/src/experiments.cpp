#include <itreg/experiments.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

namespace itreg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string method_name(Method m) {
  switch (m) {
    case Method::nesterov: return "nesterov";
    case Method::landweber: return "landweber";
    case Method::nu_method: return "nu";
    case Method::cgne: return "cgne";
  }
  return "?";
}

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::stopped: return "ok";
    case SolveStatus::not_converged: return "not_converged";
    case SolveStatus::breakdown: return "breakdown";
  }
  return "?";
}

double median(std::vector<double> v) {
  if (v.empty()) return kNaN;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Distinct noise realization per (seed, delta index), identical across
// methods so that ratio tables compare like with like.
std::uint64_t noise_seed(std::uint64_t seed, std::size_t delta_index) {
  return seed * 1000003ULL + static_cast<std::uint64_t>(delta_index);
}

struct BaseProblem {
  std::shared_ptr<const LinearOperator> op;
  Vector x_true;
  double y_norm = 0.0;
};

BaseProblem build_base_problem(const ProblemSpec& spec) {
  BaseProblem base;
  if (spec.kind == ProblemSpec::Kind::diagonal) {
    auto [op, xt] = make_diagonal_problem(spec.n_max, spec.spectrum_exponent,
                                          spec.solution_exponent,
                                          spec.alternating);
    base.op = std::move(op);
    base.x_true = std::move(xt);
  } else {
    auto [op, xt] = make_bvp_problem(spec.grid_size, spec.example_id);
    base.op = std::move(op);
    base.x_true = std::move(xt);
  }
  base.y_norm = base.op->apply(base.x_true).norm();
  return base;
}

SolverConfig make_solver_config(const MethodSpec& m, long max_iterations) {
  SolverConfig cfg;
  cfg.method = m.method;
  cfg.beta = m.beta;
  cfg.nu = m.nu;
  cfg.max_iterations = max_iterations;
  cfg.trace_errors = true;
  cfg.keep = TracePolicy::final_only;
  return cfg;
}

void run_cells(int jobs, std::size_t n_cells,
               const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || n_cells < 2) {
    for (std::size_t i = 0; i < n_cells; ++i) body(i);
    return;
  }
  const int workers = std::min<int>(jobs, static_cast<int>(n_cells));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = static_cast<std::size_t>(w); i < n_cells;
           i += static_cast<std::size_t>(workers))
        body(i);
    });
  }
  for (auto& t : pool) t.join();
}

void aggregate(RateSeries& series, const RateExperimentConfig& config) {
  for (const MethodSpec& m : config.methods) {
    const std::string label = m.label();
    std::vector<std::pair<double, double>> med_err;
    std::vector<std::pair<double, double>> med_k;
    for (double delta : config.deltas) {
      std::vector<double> errs;
      std::vector<double> ks;
      bool all_ok = true;
      for (const CellResult& cell : series.cells) {
        if (cell.method != label || cell.delta != delta) continue;
        if (cell.status != SolveStatus::stopped) all_ok = false;
        errs.push_back(cell.error);
        ks.push_back(static_cast<double>(cell.stop_k));
      }
      if (!errs.empty() && all_ok) {
        med_err.emplace_back(delta, median(errs));
        med_k.emplace_back(delta, median(ks));
      }
    }
    series.median_error[label] = med_err;
    series.median_stop_k[label] = med_k;
    if (med_err.size() >= 2) {
      series.slopes[label] = fit_loglog_slope(med_err);
    } else {
      series.slopes[label] = SlopeFit{};  // slope absent
    }
  }
}

void write_gnuplot_curves(const std::string& dir, const RateSeries& series) {
  for (const auto& [label, points] : series.median_error) {
    std::ofstream out(dir + "/rates_" + label + ".dat");
    for (const auto& [delta, err] : points)
      out << format_double(delta) << " " << format_double(err) << "\n";
  }
}

}  // namespace

std::string MethodSpec::label() const { return method_name(method); }

StoppingRule StopSpec::rule() const {
  switch (kind) {
    case StoppingRule::Kind::discrepancy: return StoppingRule::discrepancy(tau);
    case StoppingRule::Kind::a_priori: return StoppingRule::a_priori(mu, C);
    case StoppingRule::Kind::oracle: return StoppingRule::oracle();
  }
  throw std::invalid_argument("unknown stopping rule");
}

std::string StopSpec::label() const {
  switch (kind) {
    case StoppingRule::Kind::discrepancy: return "discrepancy";
    case StoppingRule::Kind::a_priori: return "apriori";
    case StoppingRule::Kind::oracle: return "k_opt";
  }
  return "?";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SlopeFit fit_loglog_slope(
    const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(points.size());
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument(
          "fit_loglog_slope: coordinates must be positive");
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0)
    throw std::invalid_argument("fit_loglog_slope: degenerate abscissae");

  SlopeFit fit;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.n_points = static_cast<int>(points.size());
  fit.valid = true;
  for (const auto& [x, y] : points) {
    const double pred = fit.slope * std::log(x) + fit.intercept;
    fit.max_residual =
        std::max(fit.max_residual, std::abs(std::log(y) - pred));
  }
  return fit;
}

RateSeries run_rate_experiment(const RateExperimentConfig& config) {
  if (config.deltas.empty() || config.seeds.empty() || config.methods.empty())
    throw std::invalid_argument("run_rate_experiment: empty grid");
  for (double d : config.deltas)
    if (!(d > 0.0))
      throw std::invalid_argument("run_rate_experiment: deltas must be > 0");

  const BaseProblem base = build_base_problem(config.problem);
  const StoppingRule rule = config.stop.rule();

  const std::size_t n_methods = config.methods.size();
  const std::size_t n_deltas = config.deltas.size();
  const std::size_t n_seeds = config.seeds.size();
  const std::size_t n_cells = n_methods * n_deltas * n_seeds;

  RateSeries series;
  series.cells.resize(n_cells);

  run_cells(config.jobs, n_cells, [&](std::size_t idx) {
    const std::size_t mi = idx / (n_deltas * n_seeds);
    const std::size_t di = (idx / n_seeds) % n_deltas;
    const std::size_t si = idx % n_seeds;
    const MethodSpec& m = config.methods[mi];

    const double delta_cfg = config.deltas[di];
    const double delta_abs =
        config.problem.relative_delta ? delta_cfg * base.y_norm : delta_cfg;
    const InverseProblem problem = add_noise(
        base.op, base.x_true, delta_abs, noise_seed(config.seeds[si], di));

    CellResult cell;
    cell.method = m.label();
    cell.delta = delta_cfg;
    cell.delta_abs = delta_abs;
    cell.seed = config.seeds[si];
    const SolverConfig solver_cfg =
        make_solver_config(m, config.max_iterations);
    const SolveResult res = solve(problem, solver_cfg, rule);
    cell.error = (res.x - problem.x_true).norm();
    cell.stop_k = res.stop_index;
    cell.status = res.status;
    cell.trace_min_error =
        res.trace.error_norms.empty()
            ? cell.error
            : *std::min_element(res.trace.error_norms.begin(),
                                res.trace.error_norms.end());
    series.cells[idx] = std::move(cell);
  });

  aggregate(series, config);

  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir);
    write_rates_csv(config.output_dir + "/rates.csv", series);
    write_slopes_csv(config.output_dir + "/slopes.csv", series);
    if (config.gnuplot) write_gnuplot_curves(config.output_dir, series);
  }
  return series;
}

RateSeries run_semisaturation_experiment(const RateExperimentConfig& config) {
  if (config.stop.kind != StoppingRule::Kind::oracle)
    throw std::invalid_argument(
        "run_semisaturation_experiment: oracle stopping required");
  return run_rate_experiment(config);
}

SemisatOrdering semisat_ordering(const RateSeries& series) {
  SemisatOrdering ord;
  const auto get = [&](const std::string& label) {
    auto it = series.slopes.find(label);
    if (it == series.slopes.end() || !it->second.valid)
      throw std::invalid_argument("semisat_ordering: missing slope for " +
                                  label);
    return it->second.slope;
  };
  ord.slope_landweber = get("landweber");
  ord.slope_nesterov = get("nesterov");
  ord.slope_nu = get("nu");
  return ord;
}

TableRecords run_comparison_tables(const TablesConfig& config) {
  if (config.deltas.empty() || config.seeds.empty())
    throw std::invalid_argument("run_comparison_tables: empty grid");

  const BaseProblem base = build_base_problem(config.problem);

  const std::vector<MethodSpec> methods = {
      {Method::nesterov, config.beta, config.nu},
      {Method::landweber, config.beta, config.nu},
      {Method::nu_method, config.beta, config.nu},
      {Method::cgne, config.beta, config.nu},
  };

  TableRecords records;
  records.deltas = config.deltas;
  std::sort(records.deltas.begin(), records.deltas.end());
  for (const char* stop : {"k_opt", "discrepancy"})
    for (const MethodSpec& m : methods)
      records.row_labels.push_back(m.label() + std::string("/") + stop);

  const std::size_t n_deltas = records.deltas.size();
  const std::size_t n_seeds = config.seeds.size();
  const std::size_t n_rows = records.row_labels.size();

  // errors[row][delta][seed], counts likewise; row layout as above.
  std::vector<std::vector<std::vector<double>>> errors(
      n_rows, std::vector<std::vector<double>>(
                  n_deltas, std::vector<double>(n_seeds, kNaN)));
  auto counts = errors;

  const std::size_t n_cells = n_deltas * n_seeds;
  run_cells(config.jobs, n_cells, [&](std::size_t idx) {
    const std::size_t di = idx / n_seeds;
    const std::size_t si = idx % n_seeds;
    const InverseProblem problem =
        add_noise(base.op, base.x_true, records.deltas[di],
                  noise_seed(config.seeds[si], di));

    for (std::size_t stop_i = 0; stop_i < 2; ++stop_i) {
      const StoppingRule rule = stop_i == 0
                                    ? StoppingRule::oracle()
                                    : StoppingRule::discrepancy(config.tau);
      for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        const std::size_t row = stop_i * methods.size() + mi;
        try {
          const SolverConfig cfg =
              make_solver_config(methods[mi], config.max_iterations);
          const SolveResult res = solve(problem, cfg, rule);
          if (res.status == SolveStatus::stopped) {
            errors[row][di][si] = (res.x - problem.x_true).norm();
            counts[row][di][si] = static_cast<double>(res.stop_index);
          }
        } catch (const std::exception&) {
          // cell stays NA
        }
      }
    }
  });

  records.ratios = Matrix::Constant(n_rows, n_deltas, kNaN);
  records.counts = Matrix::Constant(n_rows, n_deltas, kNaN);
  for (std::size_t row = 0; row < n_rows; ++row) {
    for (std::size_t di = 0; di < n_deltas; ++di) {
      std::vector<double> ratio_samples;
      std::vector<double> count_samples;
      for (std::size_t si = 0; si < n_seeds; ++si) {
        const double ref = errors[0][di][si];  // nesterov at k_opt
        const double err = errors[row][di][si];
        if (std::isfinite(ref) && std::isfinite(err) && ref > 0.0)
          ratio_samples.push_back(err / ref);
        if (std::isfinite(counts[row][di][si]))
          count_samples.push_back(counts[row][di][si]);
      }
      if (!ratio_samples.empty())
        records.ratios(row, di) = median(ratio_samples);
      if (!count_samples.empty())
        records.counts(row, di) = median(count_samples);
    }
  }

  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir);
    write_tables_csv(config.output_dir, records);
  }
  return records;
}

double bvp_optimal_beta(int example_id) {
  switch (example_id) {
    case 1:
    case 2: return 3.5;
    case 3: return 9.5;
    default:
      throw std::invalid_argument("bvp example_id must be 1, 2, or 3");
  }
}

std::vector<BvpRateRecord> run_bvp_rates(const BvpRatesConfig& config) {
  std::vector<BvpRateRecord> records;
  for (int example : config.examples) {
    const double mu = bvp_example_mu(example);
    for (double beta : {bvp_optimal_beta(example), config.suboptimal_beta}) {
      RateExperimentConfig rc;
      rc.problem.kind = ProblemSpec::Kind::bvp;
      rc.problem.grid_size = config.grid_size;
      rc.problem.example_id = example;
      rc.problem.relative_delta = true;
      rc.methods = {{Method::nesterov, beta, 1.0}};
      rc.stop.kind = StoppingRule::Kind::discrepancy;
      rc.stop.tau = config.tau;
      rc.deltas = config.deltas;
      rc.seeds = config.seeds;
      rc.max_iterations = config.max_iterations;
      rc.jobs = config.jobs;

      BvpRateRecord rec;
      rec.example_id = example;
      rec.mu = mu;
      rec.beta = beta;
      rec.optimal_slope = 2.0 * mu / (2.0 * mu + 1.0);
      rec.series = run_rate_experiment(rc);
      records.push_back(std::move(rec));
    }
  }

  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir);
    std::ofstream out(config.output_dir + "/bvp_slopes.csv");
    out << "example,mu,beta,slope,intercept,max_residual,optimal_slope\n";
    for (const BvpRateRecord& rec : records) {
      const SlopeFit& fit = rec.series.slopes.at("nesterov");
      out << rec.example_id << "," << format_double(rec.mu) << ","
          << format_double(rec.beta) << ","
          << (fit.valid ? format_double(fit.slope) : "NA") << ","
          << (fit.valid ? format_double(fit.intercept) : "NA") << ","
          << (fit.valid ? format_double(fit.max_residual) : "NA") << ","
          << format_double(rec.optimal_slope) << "\n";
    }
  }
  return records;
}

void write_rates_csv(const std::string& path, const RateSeries& series) {
  std::ofstream out(path);
  out << "method,delta,seed,error,stop_k,status\n";
  for (const CellResult& cell : series.cells) {
    out << cell.method << "," << format_double(cell.delta) << "," << cell.seed
        << "," << format_double(cell.error) << "," << cell.stop_k << ","
        << status_name(cell.status) << "\n";
  }
}

void write_slopes_csv(const std::string& path, const RateSeries& series) {
  std::ofstream out(path);
  out << "method,slope,intercept,max_residual,n_points\n";
  for (const auto& [label, fit] : series.slopes) {
    if (fit.valid) {
      out << label << "," << format_double(fit.slope) << ","
          << format_double(fit.intercept) << ","
          << format_double(fit.max_residual) << "," << fit.n_points << "\n";
    } else {
      out << label << ",NA,NA,NA," << fit.n_points << "\n";
    }
  }
}

void write_tables_csv(const std::string& dir, const TableRecords& records) {
  const auto write = [&](const std::string& path, const Matrix& table) {
    std::ofstream out(path);
    out << "method,stopping";
    for (double d : records.deltas) out << ",delta=" << format_double(d);
    out << "\n";
    for (Eigen::Index row = 0; row < table.rows(); ++row) {
      const std::string& label = records.row_labels[row];
      const std::size_t slash = label.find('/');
      out << label.substr(0, slash) << "," << label.substr(slash + 1);
      for (Eigen::Index col = 0; col < table.cols(); ++col) {
        const double v = table(row, col);
        out << ",";
        if (std::isfinite(v))
          out << format_double(v);
        else
          out << "NA";
      }
      out << "\n";
    }
  };
  write(dir + "/table1.csv", records.ratios);
  write(dir + "/table2.csv", records.counts);
}

}  // namespace itreg
