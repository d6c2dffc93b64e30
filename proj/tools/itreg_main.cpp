// Command-line front end: verification and experiment drivers over the
// library. Exit codes: 0 success, 2 usage error, 3 numerical
// non-termination, 4 verification failure.

#include <CLI11.hpp>

#include <itreg/experiments.hpp>
#include <itreg/residual_polynomials.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitVerifyFailed = 4;

using itreg::format_double;

void write_manifest(CLI::App* sub, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::ofstream f(out_dir + "/manifest.txt");
  f << sub->config_to_str(true, false);
}

itreg::Method parse_method(const std::string& name) {
  if (name == "nesterov") return itreg::Method::nesterov;
  if (name == "landweber") return itreg::Method::landweber;
  if (name == "nu") return itreg::Method::nu_method;
  if (name == "cgne") return itreg::Method::cgne;
  throw CLI::ValidationError("--method", "unknown method: " + name);
}

itreg::StoppingRule::Kind parse_stop(const std::string& name) {
  if (name == "discrepancy") return itreg::StoppingRule::Kind::discrepancy;
  if (name == "apriori") return itreg::StoppingRule::Kind::a_priori;
  if (name == "oracle") return itreg::StoppingRule::Kind::oracle;
  throw CLI::ValidationError("--stop", "unknown stopping rule: " + name);
}

// ---------------------------------------------------------------------------
// verify-poly

struct VerifyOpts {
  std::vector<double> betas{-1.0, -0.5, 0.0, 1.0, 2.0, 4.0, 9.5};
  int k_max = 150;
  int grid_n = 1001;
  std::string out = "out/verify-poly";
};

int run_verify_poly(const VerifyOpts& opt) {
  const auto grid = itreg::uniform_grid(opt.grid_n);
  std::filesystem::create_directories(opt.out);
  std::ofstream residuals(opt.out + "/residuals.csv");
  residuals << "beta,k,lambda,r_recursion,r_closed_form,abs_diff\n";
  std::ofstream summary(opt.out + "/summary.csv");
  summary << "beta,max_abs_diff,max_residual_excess,max_filter_excess,"
             "rate_monitor_ratio,status\n";

  const std::size_t dump_stride = std::max<std::size_t>(1, grid.size() / 100);
  bool all_ok = true;
  std::string first_failure;

  for (double beta : opt.betas) {
    if (beta < -1.0) {
      std::cerr << "verify-poly: beta must be >= -1 (got " << beta << ")\n";
      return kExitUsage;
    }
    const auto schedule = itreg::MomentumSchedule::beta_schedule(beta);
    const auto evals =
        itreg::residual_by_recursion(schedule, opt.k_max, grid);

    double max_diff = 0.0, max_r_excess = 0.0, max_g_excess = 0.0;
    bool beta_ok = true;
    const auto note_failure = [&](const char* what, int k, double lambda) {
      beta_ok = false;
      if (first_failure.empty())
        first_failure = std::string(what) + " at (k=" + std::to_string(k) +
                        ", beta=" + format_double(beta) +
                        ", lambda=" + format_double(lambda) + ")";
    };

    for (int k = 1; k <= opt.k_max; ++k) {
      const auto& rk = evals[k].values;
      const double g_bound = 0.5 * (k + 1) + double(k - 1) * (k - 1);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double lambda = grid[i];
        const double cf = itreg::residual_closed_form(k, lambda, beta);
        const double diff = std::abs(cf - rk[i]);
        max_diff = std::max(max_diff, diff);
        if (diff > 1e-9) note_failure("identity failure", k, lambda);

        const double r_excess = std::abs(rk[i]) - 1.0;
        max_r_excess = std::max(max_r_excess, r_excess);
        if (r_excess > 1e-12) note_failure("residual bound failure", k, lambda);

        // filter bound; the lambda = 0 endpoint uses the one-sided limit
        const double g = (1.0 - rk[i]) / std::max(lambda, 1e-12);
        const double g_excess = std::abs(g) - g_bound;
        max_g_excess = std::max(max_g_excess, g_excess);
        if (g_excess > 1e-6) note_failure("filter bound failure", k, lambda);

        if (i % dump_stride == 0) {
          residuals << format_double(beta) << "," << k << ","
                    << format_double(lambda) << "," << format_double(rk[i])
                    << "," << format_double(cf) << "," << format_double(diff)
                    << "\n";
        }
      }
    }

    // The monitor sequence plateaus once the Hilb-type regime is reached;
    // the onset scales with beta, so the reference index does too.
    double monitor_ratio = 0.0;
    const int monitor_ref =
        std::max(10, static_cast<int>(std::ceil(10.0 * (beta + 1.0))));
    if (beta > -1.0 && opt.k_max >= monitor_ref) {
      const auto monitor = itreg::rate_bound_monitor(opt.k_max, beta, grid);
      for (int k = 1; k <= opt.k_max; ++k)
        monitor_ratio = std::max(monitor_ratio, monitor[k] / monitor[monitor_ref]);
      if (monitor_ratio > 3.0)
        note_failure("rate monitor unbounded", opt.k_max, 0.0);
    }

    summary << format_double(beta) << "," << format_double(max_diff) << ","
            << format_double(max_r_excess) << ","
            << format_double(max_g_excess) << ","
            << format_double(monitor_ratio) << ","
            << (beta_ok ? "pass" : "fail") << "\n";
    std::printf("beta=%g  max|recursion-closed|=%.3e  %s\n", beta, max_diff,
                beta_ok ? "pass" : "FAIL");
    all_ok = all_ok && beta_ok;
  }

  if (!all_ok) {
    std::cerr << "verify-poly: " << first_failure << "\n";
    return kExitVerifyFailed;
  }
  std::printf("verify-poly: all checks passed\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// shared experiment option block

struct ProblemOpts {
  std::string problem = "diagonal";
  int n_max = 1000;
  double spectrum_exponent = 2.0;
  double solution_exponent = 4.0;
  bool alternating = true;
  int grid_size = 200;
  int example_id = 1;
  bool relative_delta = false;

  itreg::ProblemSpec spec() const {
    itreg::ProblemSpec s;
    if (problem == "diagonal") {
      s.kind = itreg::ProblemSpec::Kind::diagonal;
    } else if (problem == "bvp") {
      s.kind = itreg::ProblemSpec::Kind::bvp;
    } else {
      throw CLI::ValidationError("--problem", "unknown problem: " + problem);
    }
    s.n_max = n_max;
    s.spectrum_exponent = spectrum_exponent;
    s.solution_exponent = solution_exponent;
    s.alternating = alternating;
    s.grid_size = grid_size;
    s.example_id = example_id;
    s.relative_delta = relative_delta;
    return s;
  }
};

void add_problem_options(CLI::App* sub, ProblemOpts& opt) {
  sub->add_option("--problem", opt.problem, "diagonal | bvp")
      ->capture_default_str();
  sub->add_option("--n-max", opt.n_max, "diagonal dimension")
      ->capture_default_str();
  sub->add_option("--spectrum-exponent", opt.spectrum_exponent,
                  "sigma_n = n^-p")
      ->capture_default_str();
  sub->add_option("--solution-exponent", opt.solution_exponent, "x_n = n^-q")
      ->capture_default_str();
  sub->add_flag("--alternating,!--no-alternating", opt.alternating,
                "alternate solution signs")
      ->capture_default_str();
  sub->add_option("--grid-size", opt.grid_size, "bvp interior grid points")
      ->capture_default_str();
  sub->add_option("--example", opt.example_id, "bvp example id (1..3)")
      ->capture_default_str();
  sub->add_flag("--relative-delta", opt.relative_delta,
                "deltas are relative to ||y||")
      ->capture_default_str();
}

double completion_rate(const itreg::RateSeries& series) {
  if (series.cells.empty()) return 0.0;
  std::size_t ok = 0;
  for (const auto& c : series.cells)
    if (c.status == itreg::SolveStatus::stopped) ++ok;
  return double(ok) / double(series.cells.size());
}

void print_slopes(const itreg::RateSeries& series) {
  for (const auto& [label, fit] : series.slopes) {
    if (fit.valid)
      std::printf("%-10s slope=%.4f  intercept=%.4f  max_residual=%.4f\n",
                  label.c_str(), fit.slope, fit.intercept, fit.max_residual);
    else
      std::printf("%-10s slope=NA (fewer than two usable deltas)\n",
                  label.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Iterative regularization for linear ill-posed problems:\n"
      "Nesterov-accelerated Landweber with a Gegenbauer residual engine,\n"
      "classical comparison methods, and rate-experiment drivers."};
  app.require_subcommand(1);

  // ---- verify-poly
  VerifyOpts verify;
  auto* sub_verify = app.add_subcommand(
      "verify-poly", "check residual-polynomial identities and bounds");
  sub_verify->set_config("--config");
  sub_verify->add_option("--beta", verify.betas, "beta values")
      ->capture_default_str();
  sub_verify->add_option("--k-max", verify.k_max, "highest iteration index")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub_verify->add_option("--grid", verify.grid_n, "lambda grid points")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  sub_verify->add_option("--out", verify.out, "output directory")
      ->capture_default_str();

  // ---- solve
  ProblemOpts solve_problem;
  struct {
    std::string method = "nesterov";
    double beta = 4.0;
    double nu = 1.0;
    std::string stop = "discrepancy";
    double tau = 1.01;
    double mu = 0.75;
    double C = 1.0;
    double delta = 1e-3;
    std::uint64_t seed = 1;
    long k_max = 0;
    bool with_errors = true;
    std::string out = "out/solve";
  } sol;
  auto* sub_solve = app.add_subcommand("solve", "run a single solver");
  sub_solve->set_config("--config");
  add_problem_options(sub_solve, solve_problem);
  sub_solve->add_option("--method", sol.method,
                        "nesterov | landweber | nu | cgne")
      ->capture_default_str();
  sub_solve->add_option("--beta", sol.beta, "nesterov beta")
      ->capture_default_str();
  sub_solve->add_option("--nu", sol.nu, "nu-method parameter")
      ->capture_default_str();
  sub_solve->add_option("--stop", sol.stop, "discrepancy | apriori | oracle")
      ->capture_default_str();
  sub_solve->add_option("--tau", sol.tau, "discrepancy tau > 1")
      ->capture_default_str();
  sub_solve->add_option("--mu", sol.mu, "a priori smoothness index")
      ->capture_default_str();
  sub_solve->add_option("--C", sol.C, "a priori constant")
      ->capture_default_str();
  sub_solve->add_option("--delta", sol.delta, "noise level")
      ->capture_default_str();
  sub_solve->add_option("--seed", sol.seed, "noise seed")
      ->capture_default_str();
  sub_solve->add_option("--k-max", sol.k_max, "iteration cap (0 = default)")
      ->capture_default_str();
  sub_solve
      ->add_flag("--with-errors,!--no-errors", sol.with_errors,
                 "record ||x_k - x_true||")
      ->capture_default_str();
  sub_solve->add_option("--out", sol.out, "output directory")
      ->capture_default_str();

  // ---- rates
  ProblemOpts rates_problem;
  struct {
    std::vector<std::string> methods{"nesterov", "landweber", "nu"};
    double beta = 4.0;
    double nu = 1.0;
    std::string stop = "oracle";
    double tau = 1.01;
    double mu = 0.75;
    double C = 1.0;
    std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    long k_max = 0;
    int jobs = 1;
    bool gnuplot = false;
    std::string out = "out/rates";
  } rates;
  auto* sub_rates =
      app.add_subcommand("rates", "error-vs-noise rate experiment");
  sub_rates->set_config("--config");
  add_problem_options(sub_rates, rates_problem);
  sub_rates->add_option("--methods", rates.methods, "methods to run")
      ->capture_default_str();
  sub_rates->add_option("--beta", rates.beta, "nesterov beta")
      ->capture_default_str();
  sub_rates->add_option("--nu", rates.nu, "nu-method parameter")
      ->capture_default_str();
  sub_rates->add_option("--stop", rates.stop, "discrepancy | apriori | oracle")
      ->capture_default_str();
  sub_rates->add_option("--tau", rates.tau, "discrepancy tau")
      ->capture_default_str();
  sub_rates->add_option("--mu", rates.mu, "a priori smoothness index")
      ->capture_default_str();
  sub_rates->add_option("--C", rates.C, "a priori constant")
      ->capture_default_str();
  sub_rates->add_option("--deltas", rates.deltas, "noise levels")
      ->capture_default_str();
  sub_rates->add_option("--seeds", rates.seeds, "noise seeds")
      ->capture_default_str();
  sub_rates->add_option("--k-max", rates.k_max, "iteration cap (0 = default)")
      ->capture_default_str();
  sub_rates->add_option("--jobs", rates.jobs, "parallel cells")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub_rates->add_flag("--gnuplot", rates.gnuplot, "emit two-column .dat files")
      ->capture_default_str();
  sub_rates->add_option("--out", rates.out, "output directory")
      ->capture_default_str();

  // ---- semisat
  ProblemOpts semisat_problem;
  struct {
    double beta = 0.0;
    double nu = 0.4;
    std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    long k_max = 0;
    int jobs = 1;
    bool gnuplot = false;
    std::string out = "out/semisat";
  } semi;
  auto* sub_semi =
      app.add_subcommand("semisat", "semi-saturation study (oracle stopping)");
  sub_semi->set_config("--config");
  add_problem_options(sub_semi, semisat_problem);
  sub_semi->add_option("--beta", semi.beta, "undersized nesterov beta")
      ->capture_default_str();
  sub_semi->add_option("--nu", semi.nu, "undersized nu")
      ->capture_default_str();
  sub_semi->add_option("--deltas", semi.deltas, "noise levels")
      ->capture_default_str();
  sub_semi->add_option("--seeds", semi.seeds, "noise seeds")
      ->capture_default_str();
  sub_semi->add_option("--k-max", semi.k_max, "iteration cap (0 = default)")
      ->capture_default_str();
  sub_semi->add_option("--jobs", semi.jobs, "parallel cells")
      ->capture_default_str();
  sub_semi->add_flag("--gnuplot", semi.gnuplot, "emit two-column .dat files")
      ->capture_default_str();
  sub_semi->add_option("--out", semi.out, "output directory")
      ->capture_default_str();

  // ---- tables
  ProblemOpts tables_problem;
  struct {
    double beta = 4.0;
    double nu = 1.0;
    double tau = 1.01;
    std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<std::uint64_t> seeds{1, 2, 3};
    long k_max = 0;
    int jobs = 1;
    std::string out = "out/tables";
  } tab;
  auto* sub_tables =
      app.add_subcommand("tables", "method x stopping-rule comparison tables");
  sub_tables->set_config("--config");
  add_problem_options(sub_tables, tables_problem);
  sub_tables->add_option("--beta", tab.beta, "nesterov beta")
      ->capture_default_str();
  sub_tables->add_option("--nu", tab.nu, "nu-method parameter")
      ->capture_default_str();
  sub_tables->add_option("--tau", tab.tau, "discrepancy tau")
      ->capture_default_str();
  sub_tables->add_option("--deltas", tab.deltas, "noise levels")
      ->capture_default_str();
  sub_tables->add_option("--seeds", tab.seeds, "noise seeds")
      ->capture_default_str();
  sub_tables->add_option("--k-max", tab.k_max, "iteration cap (0 = default)")
      ->capture_default_str();
  sub_tables->add_option("--jobs", tab.jobs, "parallel cells")
      ->capture_default_str();
  sub_tables->add_option("--out", tab.out, "output directory")
      ->capture_default_str();

  // ---- bvp
  struct {
    std::vector<int> examples{1, 2, 3};
    int grid_size = 200;
    double tau = 1.1;
    double suboptimal_beta = 1.0;
    std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    long k_max = 0;
    int jobs = 1;
    std::string out = "out/bvp";
  } bvp;
  auto* sub_bvp = app.add_subcommand(
      "bvp", "discrepancy-rate study on the boundary-value examples");
  sub_bvp->set_config("--config");
  sub_bvp->add_option("--examples", bvp.examples, "example ids (1..3)")
      ->capture_default_str();
  sub_bvp->add_option("--grid-size", bvp.grid_size, "interior grid points")
      ->capture_default_str();
  sub_bvp->add_option("--tau", bvp.tau, "discrepancy tau")
      ->capture_default_str();
  sub_bvp->add_option("--suboptimal-beta", bvp.suboptimal_beta,
                      "comparison beta")
      ->capture_default_str();
  sub_bvp->add_option("--deltas", bvp.deltas, "relative noise levels")
      ->capture_default_str();
  sub_bvp->add_option("--seeds", bvp.seeds, "noise seeds")
      ->capture_default_str();
  sub_bvp->add_option("--k-max", bvp.k_max, "iteration cap (0 = default)")
      ->capture_default_str();
  sub_bvp->add_option("--jobs", bvp.jobs, "parallel cells")
      ->capture_default_str();
  sub_bvp->add_option("--out", bvp.out, "output directory")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sub_verify->parsed()) {
      write_manifest(sub_verify, verify.out);
      return run_verify_poly(verify);
    }

    if (sub_solve->parsed()) {
      write_manifest(sub_solve, sol.out);
      const itreg::ProblemSpec pspec = solve_problem.spec();

      itreg::SolverConfig cfg;
      cfg.method = parse_method(sol.method);
      cfg.beta = sol.beta;
      cfg.nu = sol.nu;
      cfg.max_iterations = sol.k_max;
      cfg.trace_errors = sol.with_errors;

      itreg::StoppingRule rule = itreg::StoppingRule::oracle();
      switch (parse_stop(sol.stop)) {
        case itreg::StoppingRule::Kind::discrepancy:
          if (!(sol.delta > 0.0))
            throw std::invalid_argument(
                "discrepancy stopping requires --delta > 0");
          rule = itreg::StoppingRule::discrepancy(sol.tau);
          break;
        case itreg::StoppingRule::Kind::a_priori:
          rule = itreg::StoppingRule::a_priori(sol.mu, sol.C);
          break;
        case itreg::StoppingRule::Kind::oracle:
          break;
      }

      std::shared_ptr<const itreg::LinearOperator> op;
      itreg::Vector x_true;
      if (pspec.kind == itreg::ProblemSpec::Kind::diagonal) {
        auto [o, xt] = itreg::make_diagonal_problem(
            pspec.n_max, pspec.spectrum_exponent, pspec.solution_exponent,
            pspec.alternating);
        op = o;
        x_true = xt;
      } else {
        auto [o, xt] =
            itreg::make_bvp_problem(pspec.grid_size, pspec.example_id);
        op = o;
        x_true = xt;
      }
      double delta_abs = sol.delta;
      if (pspec.relative_delta) delta_abs *= op->apply(x_true).norm();
      const auto problem = itreg::add_noise(op, x_true, delta_abs, sol.seed);

      const auto res = itreg::solve(problem, cfg, rule);

      std::ofstream trace(sol.out + "/trace.csv");
      trace << "k,residual_norm,error_norm\n";
      for (std::size_t k = 0; k < res.trace.residual_norms.size(); ++k) {
        trace << k << "," << format_double(res.trace.residual_norms[k]) << ",";
        if (k < res.trace.error_norms.size())
          trace << format_double(res.trace.error_norms[k]);
        trace << "\n";
      }

      const double err = (res.x - problem.x_true).norm();
      std::printf(
          "stop_k=%ld residual=%.6e error=%.6e status=%s\n", res.stop_index,
          res.trace.residual_norms[res.stop_index], err,
          res.status == itreg::SolveStatus::stopped
              ? "ok"
              : (res.status == itreg::SolveStatus::not_converged
                     ? "not_converged"
                     : "breakdown"));
      return res.status == itreg::SolveStatus::not_converged
                 ? kExitNoConvergence
                 : kExitOk;
    }

    if (sub_rates->parsed()) {
      write_manifest(sub_rates, rates.out);
      itreg::RateExperimentConfig cfg;
      cfg.problem = rates_problem.spec();
      for (const auto& name : rates.methods)
        cfg.methods.push_back({parse_method(name), rates.beta, rates.nu});
      cfg.stop.kind = parse_stop(rates.stop);
      cfg.stop.tau = rates.tau;
      cfg.stop.mu = rates.mu;
      cfg.stop.C = rates.C;
      cfg.deltas = rates.deltas;
      cfg.seeds = rates.seeds;
      cfg.max_iterations = rates.k_max;
      cfg.jobs = rates.jobs;
      cfg.gnuplot = rates.gnuplot;
      cfg.output_dir = rates.out;
      const auto series = itreg::run_rate_experiment(cfg);
      print_slopes(series);
      return completion_rate(series) >= 0.9 ? kExitOk : kExitNoConvergence;
    }

    if (sub_semi->parsed()) {
      write_manifest(sub_semi, semi.out);
      itreg::RateExperimentConfig cfg;
      cfg.problem = semisat_problem.spec();
      cfg.methods = {{itreg::Method::landweber, semi.beta, semi.nu},
                     {itreg::Method::nesterov, semi.beta, semi.nu},
                     {itreg::Method::nu_method, semi.beta, semi.nu}};
      cfg.stop.kind = itreg::StoppingRule::Kind::oracle;
      cfg.deltas = semi.deltas;
      cfg.seeds = semi.seeds;
      cfg.max_iterations = semi.k_max;
      cfg.jobs = semi.jobs;
      cfg.gnuplot = semi.gnuplot;
      cfg.output_dir = semi.out;
      const auto series = itreg::run_semisaturation_experiment(cfg);
      print_slopes(series);
      const auto ord = itreg::semisat_ordering(series);
      std::printf("LW >= Nesterov >= nu: %s (%.4f >= %.4f >= %.4f)\n",
                  ord.ok(0.05) ? "PASS" : "FAIL", ord.slope_landweber,
                  ord.slope_nesterov, ord.slope_nu);
      return completion_rate(series) >= 0.9 ? kExitOk : kExitNoConvergence;
    }

    if (sub_tables->parsed()) {
      write_manifest(sub_tables, tab.out);
      itreg::TablesConfig cfg;
      cfg.problem = tables_problem.spec();
      cfg.beta = tab.beta;
      cfg.nu = tab.nu;
      cfg.tau = tab.tau;
      cfg.deltas = tab.deltas;
      cfg.seeds = tab.seeds;
      cfg.max_iterations = tab.k_max;
      cfg.jobs = tab.jobs;
      cfg.output_dir = tab.out;
      const auto records = itreg::run_comparison_tables(cfg);
      std::size_t cells = 0, filled = 0;
      for (Eigen::Index r = 0; r < records.ratios.rows(); ++r)
        for (Eigen::Index c = 0; c < records.ratios.cols(); ++c) {
          ++cells;
          if (std::isfinite(records.ratios(r, c))) ++filled;
        }
      std::printf("tables written to %s (%zu/%zu cells)\n", tab.out.c_str(),
                  filled, cells);
      return filled >= cells - cells / 10 ? kExitOk : kExitNoConvergence;
    }

    if (sub_bvp->parsed()) {
      write_manifest(sub_bvp, bvp.out);
      itreg::BvpRatesConfig cfg;
      cfg.examples = bvp.examples;
      cfg.grid_size = bvp.grid_size;
      cfg.tau = bvp.tau;
      cfg.suboptimal_beta = bvp.suboptimal_beta;
      cfg.deltas = bvp.deltas;
      cfg.seeds = bvp.seeds;
      cfg.max_iterations = bvp.k_max;
      cfg.jobs = bvp.jobs;
      cfg.output_dir = bvp.out;
      const auto records = itreg::run_bvp_rates(cfg);
      double rate = 1.0;
      for (const auto& rec : records) {
        const auto& fit = rec.series.slopes.at("nesterov");
        std::printf("example %d (mu=%.4f) beta=%-4g slope=%s optimal=%.4f\n",
                    rec.example_id, rec.mu, rec.beta,
                    fit.valid ? format_double(fit.slope).c_str() : "NA",
                    rec.optimal_slope);
        rate = std::min(rate, completion_rate(rec.series));
      }
      return rate >= 0.9 ? kExitOk : kExitNoConvergence;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  }
  return kExitUsage;
}
