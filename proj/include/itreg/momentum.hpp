#pragma once

#include <itreg/recurrence.hpp>

#include <vector>

namespace itreg {

/// t-sequence of Nesterov's original scheme: t_1 = 1,
/// t_{k+1} = (1 + sqrt(1 + 4 t_k^2)) / 2.
double fista_t(int k);

/// alpha_k = (t_k - 1) / t_{k+1}; alpha_1 = 0.
double fista_alpha(int k);

/// Rule producing the extrapolation coefficients alpha_k of the two-step
/// momentum iteration. Instances are immutable value types; all queries are
/// pure functions, safe for concurrent use.
class MomentumSchedule {
public:
  enum class Kind { beta_schedule, fista, from_recurrence };

  /// alpha_k = (k-1)/(k+beta) for beta > -1; beta = -1 is permitted through
  /// the alpha_1 := 0 extension (then alpha_k = 1 for k >= 2).
  /// Throws std::domain_error for beta < -1.
  static MomentumSchedule beta_schedule(double beta);

  /// alpha_k = (t_k - 1)/t_{k+1} with the t-recurrence above.
  static MomentumSchedule fista();

  /// Sequence alpha_k solved from three-term recurrence coefficients;
  /// defined only up to coeffs.max_index().
  static MomentumSchedule from_recurrence(const RecurrenceCoefficients& coeffs);

  /// Explicitly listed alphas; alphas[k] = alpha_k for k = 1..size-1.
  static MomentumSchedule from_alphas(std::vector<double> alphas);

  /// Momentum coefficient for step k >= 1.
  double alpha(int k) const;

  /// alpha_1..alpha_k_max in one pass; result[k] = alpha_k, result[0] = 0.
  std::vector<double> alphas(int k_max) const;

  Kind kind() const { return kind_; }
  double beta() const { return beta_; }

private:
  MomentumSchedule(Kind kind, double beta) : kind_(kind), beta_(beta) {}

  Kind kind_;
  double beta_ = 1.0;
  std::vector<double> stored_;  // from_recurrence / from_alphas
};

}  // namespace itreg
