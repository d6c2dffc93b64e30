#include <itreg/solvers.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace itreg {

long effective_max_iterations(const SolverConfig& config) {
  if (config.max_iterations > 0) return config.max_iterations;
  return config.method == Method::landweber ? 1000000L : 100000L;
}

double effective_apriori_beta(const SolverConfig& config) {
  switch (config.method) {
    case Method::nesterov:
      if (config.schedule &&
          config.schedule->kind() == MomentumSchedule::Kind::beta_schedule)
        return config.schedule->beta();
      return config.beta;
    case Method::nu_method:
      return 4.0 * config.nu - 1.0;  // saturation at mu = nu
    case Method::landweber:
      return std::numeric_limits<double>::infinity();  // never saturates
    case Method::cgne:
      throw std::invalid_argument("a priori indices are not defined for CGNE");
  }
  return 0.0;  // unreachable
}

namespace {

// Per-iteration bookkeeping shared by all solver loops: traces, the stopping
// decision, and the running-argmin iterate needed by the oracle rule.
class RunController {
public:
  RunController(const InverseProblem& problem, const SolverConfig& config,
                const StoppingRule& rule, double apriori_beta)
      : problem_(problem), config_(config), rule_(rule) {
    cap_ = effective_max_iterations(config);
    track_errors_ = config.trace_errors ||
                    rule.kind == StoppingRule::Kind::oracle;
    if (track_errors_ && problem.x_true.size() == 0)
      throw std::invalid_argument("error tracing requires a known x_true");

    switch (rule.kind) {
      case StoppingRule::Kind::discrepancy:
        if (!(rule.tau > 1.0))
          throw std::invalid_argument("discrepancy rule requires tau > 1");
        if (!(problem.delta > 0.0))
          throw std::invalid_argument(
              "discrepancy rule is inapplicable for delta = 0");
        break;
      case StoppingRule::Kind::a_priori:
        apriori_k_ = apriori_stop(problem.delta, rule.mu, apriori_beta,
                                  rule.C);
        break;
      case StoppingRule::Kind::oracle:
        break;
    }
    trace_.kept = config.keep;
  }

  long cap() const { return cap_; }

  /// Records iterate k and decides whether to stop. Returns true when the
  /// run is over; the result is then available through result().
  bool observe(long k, const Vector& x, double residual_norm) {
    trace_.residual_norms.push_back(residual_norm);
    double err = 0.0;
    if (track_errors_) {
      err = (x - problem_.x_true).norm();
      trace_.error_norms.push_back(err);
    }
    if (config_.keep == TracePolicy::all ||
        (config_.keep == TracePolicy::checkpointed &&
         config_.checkpoint_interval > 0 &&
         k % config_.checkpoint_interval == 0)) {
      trace_.iterates.emplace_back(k, x);
    }

    switch (rule_.kind) {
      case StoppingRule::Kind::discrepancy:
        if (residual_norm <= rule_.tau * problem_.delta)
          return finish(x, k, SolveStatus::stopped);
        break;
      case StoppingRule::Kind::a_priori:
        if (k >= apriori_k_) return finish(x, k, SolveStatus::stopped);
        break;
      case StoppingRule::Kind::oracle:
        if (best_k_ < 0 || err < best_err_) {
          best_err_ = err;
          best_k_ = k;
          best_x_ = x;
        }
        if (k - best_k_ >= oracle_patience(best_k_))
          return finish(best_x_, best_k_, SolveStatus::stopped);
        break;
    }

    if (k >= cap_) {
      if (rule_.kind == StoppingRule::Kind::oracle && best_k_ >= 0)
        return finish(best_x_, best_k_, SolveStatus::not_converged);
      return finish(x, k, SolveStatus::not_converged);
    }
    return false;
  }

  bool finish(const Vector& x, long k, SolveStatus status) {
    result_.x = x;
    result_.stop_index = k;
    result_.status = status;
    done_ = true;
    return true;
  }

  SolveResult take() {
    result_.trace = std::move(trace_);
    return std::move(result_);
  }

  bool done() const { return done_; }

private:
  const InverseProblem& problem_;
  const SolverConfig& config_;
  const StoppingRule& rule_;
  long cap_ = 0;
  long apriori_k_ = -1;
  bool track_errors_ = false;
  IterateTrace trace_;
  double best_err_ = std::numeric_limits<double>::infinity();
  long best_k_ = -1;
  Vector best_x_;
  SolveResult result_;
  bool done_ = false;
};

// Two-step momentum loop covering Nesterov (general alpha_k) and Landweber
// (alpha_k = 0). The data-space image of the current iterate is recomputed
// from x_k each sweep, so traced residuals carry no recurrence drift, and
// A z_k is assembled by linearity from A x_k and A x_{k-1}:
// one apply + one apply_adjoint per iteration.
SolveResult momentum_loop(const InverseProblem& problem,
                          const SolverConfig& config, const StoppingRule& stop,
                          const std::vector<double>* alphas,
                          double apriori_beta) {
  const LinearOperator& A = *problem.op;
  RunController control(problem, config, stop, apriori_beta);

  Vector x_prev = Vector::Zero(A.solution_dim());
  Vector x = x_prev;
  Vector v_prev = Vector::Zero(A.data_dim());  // A x_{k-1}
  Vector v = v_prev;                           // A x_k

  for (long k = 0;; ++k) {
    if (k > 0) v = A.apply(x);
    const double rn = (problem.y_noisy - v).norm();
    if (control.observe(k, x, rn)) break;

    const double a = (k == 0 || alphas == nullptr)
                         ? 0.0
                         : (*alphas)[static_cast<std::size_t>(k)];
    Vector z = x + a * (x - x_prev);
    Vector vz = v + a * (v - v_prev);
    Vector x_next = z + A.apply_adjoint(problem.y_noisy - vz);

    x_prev = std::move(x);
    v_prev = v;
    x = std::move(x_next);
  }
  return control.take();
}

}  // namespace

SolveResult nesterov_solve(const InverseProblem& problem,
                           const SolverConfig& config,
                           const StoppingRule& stop) {
  if (!problem.op) throw std::invalid_argument("nesterov_solve: no operator");
  const MomentumSchedule schedule =
      config.schedule ? *config.schedule
                      : MomentumSchedule::beta_schedule(config.beta);
  const long cap = effective_max_iterations(config);
  const std::vector<double> alphas = schedule.alphas(cap);
  const double apriori_beta =
      schedule.kind() == MomentumSchedule::Kind::beta_schedule
          ? schedule.beta()
          : config.beta;
  return momentum_loop(problem, config, stop, &alphas, apriori_beta);
}

SolveResult landweber_solve(const InverseProblem& problem,
                            const SolverConfig& config,
                            const StoppingRule& stop) {
  if (!problem.op) throw std::invalid_argument("landweber_solve: no operator");
  return momentum_loop(problem, config, stop, nullptr,
                       std::numeric_limits<double>::infinity());
}

double nu_method_mu(int k, double nu) {
  if (k < 2) throw std::invalid_argument("nu_method_mu: defined for k >= 2");
  return (k - 1.0) * (2.0 * k - 3.0) * (2.0 * k + 2.0 * nu - 1.0) /
         ((k + 2.0 * nu - 1.0) * (2.0 * k + 4.0 * nu - 1.0) *
          (2.0 * k + 2.0 * nu - 3.0));
}

double nu_method_omega(int k, double nu) {
  if (k < 2)
    throw std::invalid_argument("nu_method_omega: defined for k >= 2");
  return 4.0 * (2.0 * k + 2.0 * nu - 1.0) * (k + nu - 1.0) /
         ((k + 2.0 * nu - 1.0) * (2.0 * k + 4.0 * nu - 1.0));
}

SolveResult nu_method_solve(const InverseProblem& problem,
                            const SolverConfig& config,
                            const StoppingRule& stop) {
  if (!problem.op) throw std::invalid_argument("nu_method_solve: no operator");
  if (!(config.nu > 0.0))
    throw std::invalid_argument("nu_method_solve: nu must be positive");

  const LinearOperator& A = *problem.op;
  RunController control(problem, config, stop, 4.0 * config.nu - 1.0);

  Vector x_prev = Vector::Zero(A.solution_dim());
  Vector x = x_prev;

  for (long k = 0;; ++k) {
    const Vector v = (k == 0) ? Vector::Zero(A.data_dim()) : A.apply(x);
    const double rn = (problem.y_noisy - v).norm();
    if (control.observe(k, x, rn)) break;

    Vector x_next;
    if (k == 0) {
      const double omega1 = (4.0 * config.nu + 2.0) / (4.0 * config.nu + 1.0);
      x_next = omega1 * A.apply_adjoint(problem.y_noisy);
    } else {
      const int j = static_cast<int>(k) + 1;  // index of the produced iterate
      const double mu_j = nu_method_mu(j, config.nu);
      const double om_j = nu_method_omega(j, config.nu);
      x_next = x + mu_j * (x - x_prev) +
               om_j * A.apply_adjoint(problem.y_noisy - v);
    }
    x_prev = std::move(x);
    x = std::move(x_next);
  }
  return control.take();
}

SolveResult cgne_solve(const InverseProblem& problem,
                       const SolverConfig& config, const StoppingRule& stop) {
  if (!problem.op) throw std::invalid_argument("cgne_solve: no operator");
  if (stop.kind == StoppingRule::Kind::a_priori)
    throw std::invalid_argument(
        "cgne_solve: a priori stopping is not supported for CGNE");

  const LinearOperator& A = *problem.op;
  RunController control(problem, config, stop, 0.0);

  Vector x = Vector::Zero(A.solution_dim());
  if (control.observe(0, x, problem.y_noisy.norm())) return control.take();

  Vector r = problem.y_noisy;      // data-space residual recurrence
  Vector s = A.apply_adjoint(r);   // normal-equation residual
  Vector p = s;
  double gamma = s.squaredNorm();

  for (long k = 1;; ++k) {
    const Vector q = A.apply(p);
    const double qn2 = q.squaredNorm();
    if (qn2 == 0.0 || gamma == 0.0) {
      control.finish(x, k - 1, SolveStatus::breakdown);
      break;
    }
    const double step = gamma / qn2;
    x += step * p;
    r -= step * q;

    const double rn = (problem.y_noisy - A.apply(x)).norm();
    if (control.observe(k, x, rn)) break;

    s = A.apply_adjoint(r);
    const double gamma_next = s.squaredNorm();
    p = s + (gamma_next / gamma) * p;
    gamma = gamma_next;
  }
  return control.take();
}

SolveResult solve(const InverseProblem& problem, const SolverConfig& config,
                  const StoppingRule& stop) {
  switch (config.method) {
    case Method::nesterov: return nesterov_solve(problem, config, stop);
    case Method::landweber: return landweber_solve(problem, config, stop);
    case Method::nu_method: return nu_method_solve(problem, config, stop);
    case Method::cgne: return cgne_solve(problem, config, stop);
  }
  throw std::invalid_argument("solve: unknown method");
}

}  // namespace itreg
