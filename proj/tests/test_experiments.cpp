#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <itreg/experiments.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace itreg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RateExperimentConfig small_config() {
  RateExperimentConfig cfg;
  cfg.problem.n_max = 200;
  cfg.methods = {{Method::nesterov, 4.0, 1.0}};
  cfg.stop.kind = StoppingRule::Kind::oracle;
  cfg.deltas = {1e-1, 1e-2, 1e-3};
  cfg.seeds = {1, 2};
  return cfg;
}

}  // namespace

TEST_CASE("fit_loglog_slope") {
  SUBCASE("exact power law") {
    std::vector<std::pair<double, double>> pts;
    for (double d : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5})
      pts.emplace_back(d, std::pow(d, 0.6));
    auto fit = fit_loglog_slope(pts);
    CHECK(fit.slope == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(fit.max_residual <= 1e-12);
  }
  SUBCASE("two points interpolate exactly") {
    auto fit = fit_loglog_slope({{1e-1, 0.5}, {1e-3, 0.05}});
    CHECK(fit.n_points == 2);
    CHECK(fit.max_residual <= 1e-12);
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("multiplicative perturbation stays within the band") {
    // value = c * d^0.6 * (1 + eta), |eta| <= 0.1, over five decades
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> eta(-0.1, 0.1);
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<std::pair<double, double>> pts;
      for (double d : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5})
        pts.emplace_back(d, 2.0 * std::pow(d, 0.6) * (1.0 + eta(rng)));
      auto fit = fit_loglog_slope(pts);
      CHECK(std::abs(fit.slope - 0.6) <= 0.05);
    }
  }
  SUBCASE("invalid inputs") {
    CHECK_THROWS_AS(fit_loglog_slope({{1e-1, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(fit_loglog_slope({{1e-1, 0.5}, {1e-2, -0.1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_loglog_slope({{0.0, 0.5}, {1e-2, 0.1}}),
                    std::invalid_argument);
  }
}

TEST_CASE("single-delta run reports an absent slope") {
  auto cfg = small_config();
  cfg.deltas = {1e-2};
  auto series = run_rate_experiment(cfg);
  CHECK(series.cells.size() == 2);
  CHECK_FALSE(series.slopes.at("nesterov").valid);
  for (const auto& cell : series.cells) CHECK(cell.error > 0.0);
}

TEST_CASE("single-seed run completes and emits per-seed rows") {
  auto cfg = small_config();
  cfg.seeds = {7};
  cfg.output_dir = "exp_out_single";
  auto series = run_rate_experiment(cfg);
  CHECK(series.cells.size() == cfg.deltas.size());
  const std::string rates = slurp("exp_out_single/rates.csv");
  CHECK(rates.find("method,delta,seed,error,stop_k,status") !=
        std::string::npos);
  CHECK(rates.find("nesterov,0.001,7,") != std::string::npos);
  std::filesystem::remove_all("exp_out_single");
}

TEST_CASE("identical config and seeds give bitwise-identical CSVs") {
  auto cfg = small_config();
  cfg.output_dir = "exp_out_a";
  run_rate_experiment(cfg);
  cfg.output_dir = "exp_out_b";
  cfg.jobs = 2;  // parallel cells must not change the output
  run_rate_experiment(cfg);
  CHECK(slurp("exp_out_a/rates.csv") == slurp("exp_out_b/rates.csv"));
  CHECK(slurp("exp_out_a/slopes.csv") == slurp("exp_out_b/slopes.csv"));
  std::filesystem::remove_all("exp_out_a");
  std::filesystem::remove_all("exp_out_b");
}

TEST_CASE("discrepancy-stop error dominates the trace minimum") {
  auto cfg = small_config();
  cfg.stop.kind = StoppingRule::Kind::discrepancy;
  cfg.stop.tau = 1.01;
  auto series = run_rate_experiment(cfg);
  for (const auto& cell : series.cells) {
    CHECK(cell.status == SolveStatus::stopped);
    CHECK(cell.error >= cell.trace_min_error - 1e-15);
  }
}

TEST_CASE("slopes land in [0, 1] on the diagonal problem") {
  auto cfg = small_config();
  cfg.deltas = {1e-1, 1e-2, 1e-3, 1e-4};
  cfg.methods = {{Method::nesterov, 4.0, 1.0}, {Method::landweber, 4.0, 1.0}};
  auto series = run_rate_experiment(cfg);
  for (const auto& [label, fit] : series.slopes) {
    REQUIRE(fit.valid);
    CHECK(fit.slope >= 0.0);
    CHECK(fit.slope <= 1.0);
  }
}

TEST_CASE("comparison tables: self-ratio row and layout") {
  TablesConfig cfg;
  cfg.problem.n_max = 200;
  cfg.beta = 4.0;
  cfg.nu = 1.0;
  cfg.tau = 1.01;
  cfg.deltas = {1e-1, 1e-2, 1e-3};
  cfg.seeds = {1, 2};
  cfg.output_dir = "exp_out_tables";
  auto records = run_comparison_tables(cfg);

  REQUIRE(records.row_labels.size() == 8);
  CHECK(records.row_labels[0] == "nesterov/k_opt");
  // Nesterov/k_opt ratio row is identically 1
  for (Eigen::Index c = 0; c < records.ratios.cols(); ++c)
    CHECK(records.ratios(0, c) == doctest::Approx(1.0).epsilon(1e-15));
  // deltas ascending
  for (std::size_t i = 1; i < records.deltas.size(); ++i)
    CHECK(records.deltas[i] > records.deltas[i - 1]);

  const std::string t1 = slurp("exp_out_tables/table1.csv");
  CHECK(t1.find("method,stopping,delta=0.001,delta=0.01,delta=0.1") !=
        std::string::npos);
  CHECK(t1.find("nesterov,k_opt,1,1,1") != std::string::npos);
  std::filesystem::remove_all("exp_out_tables");
}

TEST_CASE("semisaturation ordering helper") {
  RateSeries series;
  series.slopes["landweber"] = {0.60, 0.0, 0.0, 5, true};
  series.slopes["nesterov"] = {0.50, 0.0, 0.0, 5, true};
  series.slopes["nu"] = {0.45, 0.0, 0.0, 5, true};
  auto ord = semisat_ordering(series);
  CHECK(ord.ok(0.05));
  CHECK(ord.slope_landweber == 0.60);

  series.slopes["nu"].slope = 0.58;
  CHECK_FALSE(semisat_ordering(series).ok(0.05));

  RateExperimentConfig bad;
  bad.stop.kind = StoppingRule::Kind::discrepancy;
  CHECK_THROWS_AS(run_semisaturation_experiment(bad), std::invalid_argument);
}

TEST_CASE("bvp rate driver emits one record per (example, beta)") {
  BvpRatesConfig cfg;
  cfg.examples = {2};
  cfg.grid_size = 32;
  cfg.deltas = {1e-1, 1e-2};
  cfg.seeds = {1};
  auto records = run_bvp_rates(cfg);
  REQUIRE(records.size() == 2);
  CHECK(records[0].beta == doctest::Approx(3.5));
  CHECK(records[1].beta == doctest::Approx(1.0));
  CHECK(records[0].mu == doctest::Approx(5.0 / 8.0));
  CHECK(records[0].optimal_slope == doctest::Approx(5.0 / 9.0));
  for (const auto& rec : records) {
    CHECK(rec.series.cells.size() == 2);
    for (const auto& cell : rec.series.cells)
      CHECK(cell.delta_abs < cell.delta);  // relative noise scaling applied
  }
}
