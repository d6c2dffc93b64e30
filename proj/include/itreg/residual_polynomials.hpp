#pragma once

#include <itreg/momentum.hpp>

#include <vector>

namespace itreg {

/// Values of the residual polynomial r_k on a lambda grid in [0, 1].
struct ResidualEvaluation {
  int k = 0;
  std::vector<double> values;  // aligned with grid
  std::vector<double> grid;
};

/// n uniform points on [0, 1], both endpoints included.
std::vector<double> uniform_grid(int n);

/// Evaluates r_0..r_k_max on the grid via the two-step recursion
///   r_{k+1} = (1 - lambda) [ r_k + alpha_k (r_k - r_{k-1}) ],
///   r_0 = 1, r_1 = 1 - lambda.
/// Throws std::domain_error if a grid point lies outside [0, 1].
std::vector<ResidualEvaluation> residual_by_recursion(
    const MomentumSchedule& schedule, int k_max,
    const std::vector<double>& grid);

/// Normalized Gegenbauer value C_n^{((beta+1)/2)}(x) / C_n^{((beta+1)/2)}(1),
/// propagated through the stable normalized recursion
///   q_k(x) = (1 + alpha_k) x q_{k-1}(x) - alpha_k q_{k-2}(x),
///   q_0 = 1, q_1 = x,  alpha_k = (k-1)/(k+beta),
/// which never forms the unbounded unnormalized values. Requires beta > -1
/// and x in [0, 1].
double gegenbauer_ratio(int n, double x, double beta);

/// Chebyshev polynomial of the first kind T_n(x) (equals the ratio
/// T_n(x)/T_n(1)); the beta -> -1 limit of gegenbauer_ratio.
double chebyshev_t_ratio(int n, double x);

/// Closed form of the residual polynomial,
///   r_k(lambda) = (1-lambda)^{(k+1)/2} *
///                 C_{k-1}^{((beta+1)/2)}(sqrt(1-lambda)) / C_{k-1}(1),
/// for k >= 1 and beta > -1; beta = -1 uses the Chebyshev first-kind ratio.
double residual_closed_form(int k, double lambda, double beta);

/// Spectral filter g_k(lambda) = (1 - r_k(lambda)) / lambda with r_k from the
/// recursion. Evaluation points below 1e-12 are clamped to 1e-12 (the
/// one-sided limit); lambda <= 0 throws std::domain_error.
double filter_function(const MomentumSchedule& schedule, int k, double lambda);

/// Monitors the Gegenbauer decay bound: returns, for k = 1..k_max,
///   M_k = k^{(beta+1)/2} * sup_grid lambda^{(beta+1)/4}
///         |gegenbauer_ratio(k, sqrt(1-lambda), beta)|.
/// Boundedness of M_k witnesses the k^{-(beta+1)/2} decay rate.
/// result[k] = M_k, result[0] = 0.
std::vector<double> rate_bound_monitor(int k_max, double beta,
                                       const std::vector<double>& grid);

/// Landweber analog: B_k = (k+1)^mu * sup_grid lambda^mu (1-lambda)^k,
/// for k = 1..k_max; bounded uniformly in k.
std::vector<double> landweber_rate_monitor(int k_max, double mu,
                                           const std::vector<double>& grid);

}  // namespace itreg
