#pragma once

#include <itreg/momentum.hpp>
#include <itreg/problems.hpp>
#include <itreg/stopping.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace itreg {

enum class Method { nesterov, landweber, nu_method, cgne };

enum class TracePolicy { final_only, all, checkpointed };

struct SolverConfig {
  Method method = Method::nesterov;
  double beta = 1.0;  // nesterov
  double nu = 1.0;    // nu-method
  /// Overrides the beta-schedule for nesterov (e.g. the FISTA sequence).
  std::optional<MomentumSchedule> schedule;
  /// 0 picks the per-method default: 10^6 for landweber, 10^5 otherwise.
  long max_iterations = 0;
  /// Record ||x_k - x_true|| per iteration (implied by the oracle rule).
  bool trace_errors = false;
  TracePolicy keep = TracePolicy::final_only;
  long checkpoint_interval = 100;
};

/// Per-iteration record of a solver run. residual_norms[k] = ||A x_k - y_d||
/// for k = 0..K (so residual_norms[0] = ||y_d||); error_norms parallel when
/// recorded, empty otherwise. iterates holds (k, x_k) pairs per the policy.
struct IterateTrace {
  std::vector<double> residual_norms;
  std::vector<double> error_norms;
  TracePolicy kept = TracePolicy::final_only;
  std::vector<std::pair<long, Vector>> iterates;
};

enum class SolveStatus {
  stopped,        // the stopping rule fired
  not_converged,  // iteration cap reached first
  breakdown       // CGNE zero-direction breakdown
};

struct SolveResult {
  Vector x;            // iterate at the stopping index
  long stop_index = 0;
  SolveStatus status = SolveStatus::stopped;
  IterateTrace trace;
};

/// Nesterov-accelerated Landweber iteration
///   z_k = x_k + alpha_k (x_k - x_{k-1}),
///   x_{k+1} = z_k + A*(y_d - A z_k),          x_0 = 0, x_1 = A* y_d,
/// with alpha_k from config.schedule or the beta-schedule.
SolveResult nesterov_solve(const InverseProblem& problem,
                           const SolverConfig& config,
                           const StoppingRule& stop);

/// Classical Landweber iteration (alpha_k = 0).
SolveResult landweber_solve(const InverseProblem& problem,
                            const SolverConfig& config,
                            const StoppingRule& stop);

/// Brakhage's nu-method: two-step semiiterative update
///   x_{k+1} = x_k + mu_{k+1}(x_k - x_{k-1}) + omega_{k+1} A*(y_d - A x_k)
/// with x_1 = (4 nu + 2)/(4 nu + 1) A* y_d.
SolveResult nu_method_solve(const InverseProblem& problem,
                            const SolverConfig& config,
                            const StoppingRule& stop);

/// Coefficients of the nu-method step producing x_k, k >= 2.
double nu_method_mu(int k, double nu);
double nu_method_omega(int k, double nu);

/// Conjugate gradients on the normal equations A*A x = A* y_d with x_0 = 0;
/// the traced residual is the data-space norm ||y_d - A x_k||, recomputed
/// from the iterate each step. Rejects the a priori rule.
SolveResult cgne_solve(const InverseProblem& problem,
                       const SolverConfig& config, const StoppingRule& stop);

/// Dispatch on config.method.
SolveResult solve(const InverseProblem& problem, const SolverConfig& config,
                  const StoppingRule& stop);

/// Iteration cap actually used for the given config.
long effective_max_iterations(const SolverConfig& config);

/// Saturation parameter passed to apriori_stop for each method: beta for
/// nesterov, 4 nu - 1 for the nu-method, +infinity for landweber.
double effective_apriori_beta(const SolverConfig& config);

}  // namespace itreg
