#include <itreg/residual_polynomials.hpp>

#include <cmath>
#include <stdexcept>

namespace itreg {

namespace {

constexpr double kLambdaFloor = 1e-12;

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty())
    throw std::invalid_argument("lambda grid must be non-empty");
  for (double lambda : grid) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
      throw std::domain_error("lambda grid point outside [0, 1]");
  }
}

}  // namespace

std::vector<double> uniform_grid(int n) {
  if (n < 2) throw std::invalid_argument("uniform_grid: need >= 2 points");
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = double(i) / (n - 1);
  return grid;
}

std::vector<ResidualEvaluation> residual_by_recursion(
    const MomentumSchedule& schedule, int k_max,
    const std::vector<double>& grid) {
  if (k_max < 0)
    throw std::invalid_argument("residual_by_recursion: k_max must be >= 0");
  validate_grid(grid);

  const std::size_t n = grid.size();
  std::vector<ResidualEvaluation> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);

  ResidualEvaluation r0;
  r0.k = 0;
  r0.grid = grid;
  r0.values.assign(n, 1.0);
  out.push_back(std::move(r0));
  if (k_max == 0) return out;

  ResidualEvaluation r1;
  r1.k = 1;
  r1.grid = grid;
  r1.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) r1.values[i] = 1.0 - grid[i];
  out.push_back(std::move(r1));

  const std::vector<double> alpha =
      k_max >= 2 ? schedule.alphas(k_max - 1) : std::vector<double>{0.0, 0.0};
  for (int k = 1; k < k_max; ++k) {
    const std::vector<double>& rk = out[k].values;
    const std::vector<double>& rkm1 = out[k - 1].values;
    ResidualEvaluation next;
    next.k = k + 1;
    next.grid = grid;
    next.values.resize(n);
    const double a = alpha[k];
    for (std::size_t i = 0; i < n; ++i) {
      next.values[i] =
          (1.0 - grid[i]) * (rk[i] + a * (rk[i] - rkm1[i]));
    }
    out.push_back(std::move(next));
  }
  return out;
}

double gegenbauer_ratio(int n, double x, double beta) {
  if (n < 0) throw std::invalid_argument("gegenbauer_ratio: n must be >= 0");
  if (!(beta > -1.0))
    throw std::domain_error("gegenbauer_ratio: requires beta > -1");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("gegenbauer_ratio: x must lie in [0, 1]");

  if (n == 0) return 1.0;
  double q_prev = 1.0;  // q_0
  double q = x;         // q_1
  for (int k = 2; k <= n; ++k) {
    const double a = (k - 1.0) / (k + beta);
    const double q_next = (1.0 + a) * x * q - a * q_prev;
    q_prev = q;
    q = q_next;
  }
  return q;
}

double chebyshev_t_ratio(int n, double x) {
  if (n < 0) throw std::invalid_argument("chebyshev_t_ratio: n must be >= 0");
  if (n == 0) return 1.0;
  double t_prev = 1.0;
  double t = x;
  for (int k = 2; k <= n; ++k) {
    const double t_next = 2.0 * x * t - t_prev;
    t_prev = t;
    t = t_next;
  }
  return t;
}

double residual_closed_form(int k, double lambda, double beta) {
  if (k < 1)
    throw std::invalid_argument("residual_closed_form: k must be >= 1");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::domain_error("residual_closed_form: lambda outside [0, 1]");
  if (beta < -1.0)
    throw std::domain_error("residual_closed_form: requires beta >= -1");

  const double x = std::sqrt(1.0 - lambda);
  const double ratio = (beta == -1.0) ? chebyshev_t_ratio(k - 1, x)
                                      : gegenbauer_ratio(k - 1, x, beta);
  return std::pow(1.0 - lambda, 0.5 * (k + 1)) * ratio;
}

double filter_function(const MomentumSchedule& schedule, int k,
                       double lambda) {
  if (k < 0) throw std::invalid_argument("filter_function: k must be >= 0");
  if (!(lambda > 0.0))
    throw std::domain_error("filter_function: lambda must be positive");
  if (lambda > 1.0)
    throw std::domain_error("filter_function: lambda outside (0, 1]");
  if (lambda < kLambdaFloor) lambda = kLambdaFloor;  // one-sided limit

  if (k == 0) return 0.0;
  // r_k(lambda) by the scalar recursion.
  double r_prev = 1.0;
  double r = 1.0 - lambda;
  for (int j = 1; j < k; ++j) {
    const double a = schedule.alpha(j);
    const double r_next = (1.0 - lambda) * (r + a * (r - r_prev));
    r_prev = r;
    r = r_next;
  }
  return (1.0 - r) / lambda;
}

std::vector<double> rate_bound_monitor(int k_max, double beta,
                                       const std::vector<double>& grid) {
  if (k_max < 1)
    throw std::invalid_argument("rate_bound_monitor: k_max must be >= 1");
  if (!(beta > -1.0))
    throw std::domain_error("rate_bound_monitor: requires beta > -1");
  validate_grid(grid);

  std::vector<double> sup(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (double lambda : grid) {
    const double x = std::sqrt(1.0 - lambda);
    const double weight = std::pow(lambda, 0.25 * (beta + 1.0));
    double q_prev = 1.0;  // degree 0
    double q = x;         // degree 1
    sup[1] = std::max(sup[1], weight * std::abs(q));
    for (int k = 2; k <= k_max; ++k) {
      const double a = (k - 1.0) / (k + beta);
      const double q_next = (1.0 + a) * x * q - a * q_prev;
      q_prev = q;
      q = q_next;
      sup[k] = std::max(sup[k], weight * std::abs(q));
    }
  }
  for (int k = 1; k <= k_max; ++k)
    sup[k] *= std::pow(double(k), 0.5 * (beta + 1.0));
  return sup;
}

std::vector<double> landweber_rate_monitor(int k_max, double mu,
                                           const std::vector<double>& grid) {
  if (k_max < 1)
    throw std::invalid_argument("landweber_rate_monitor: k_max must be >= 1");
  if (!(mu > 0.0))
    throw std::invalid_argument("landweber_rate_monitor: mu must be positive");
  validate_grid(grid);

  std::vector<double> sup(static_cast<std::size_t>(k_max) + 1, 0.0);
  std::vector<double> weight(grid.size());
  std::vector<double> decay(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    weight[i] = std::pow(grid[i], mu);
    decay[i] = 1.0;
  }
  for (int k = 1; k <= k_max; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      decay[i] *= 1.0 - grid[i];
      s = std::max(s, weight[i] * decay[i]);
    }
    sup[k] = std::pow(k + 1.0, mu) * s;
  }
  return sup;
}

}  // namespace itreg
