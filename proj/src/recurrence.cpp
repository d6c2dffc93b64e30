#include <itreg/recurrence.hpp>

#include <cmath>
#include <limits>

namespace itreg {

RecurrenceCoefficients alpha_to_recurrence(const std::vector<double>& alphas,
                                           int k_max) {
  if (k_max < 1)
    throw std::invalid_argument("alpha_to_recurrence: k_max must be >= 1");
  if (static_cast<int>(alphas.size()) <= k_max)
    throw std::invalid_argument("alpha_to_recurrence: too few alphas");

  RecurrenceCoefficients rc;
  rc.c.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  rc.d.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  rc.c[0] = 1.0;

  const double a1 = alphas[1];
  if (a1 < 0.0)
    throw recurrence_domain_error(1, "alpha_1 must be non-negative");
  if (a1 == 0.0) {
    rc.d[1] = 0.0;  // theta_1 = infinity; P_1 is unconstrained
    rc.c[1] = 1.0;
  } else {
    rc.d[1] = 1.0;
    rc.c[1] = 1.0 + 1.0 / a1;
  }

  for (int k = 2; k <= k_max; ++k) {
    const double ak = alphas[k];
    if (!(ak > 0.0))
      throw recurrence_domain_error(
          k, "alpha_" + std::to_string(k) + " must be positive");
    rc.d[k] = 1.0;
    rc.c[k] = (1.0 + 1.0 / ak) * (alphas[k - 1] + 1.0) / rc.c[k - 1];
  }
  return rc;
}

std::vector<double> recurrence_to_alpha(const RecurrenceCoefficients& coeffs,
                                        int k_max) {
  if (k_max < 1)
    throw std::invalid_argument("recurrence_to_alpha: k_max must be >= 1");
  if (coeffs.max_index() < k_max ||
      static_cast<int>(coeffs.d.size()) <= k_max)
    throw std::invalid_argument("recurrence_to_alpha: too few coefficients");

  std::vector<double> alphas(static_cast<std::size_t>(k_max) + 1, 0.0);

  // theta_k tracked through the factor f_k = 1 - 1/theta_k; d_1 = 0 encodes
  // theta_1 = infinity (alpha_1 = 0, f_1 = 1).
  double f = 0.0;
  if (coeffs.d[1] == 0.0) {
    alphas[1] = 0.0;
    f = 1.0;
  } else {
    const double theta1 = coeffs.c[1] * coeffs.c[0] / coeffs.d[1];
    if (!(theta1 > 1.0))
      throw recurrence_domain_error(
          1, "recurrence leaves the positive momentum domain at k = 1");
    alphas[1] = 1.0 / (theta1 - 1.0);
    f = 1.0 - 1.0 / theta1;
  }

  for (int k = 2; k <= k_max; ++k) {
    if (coeffs.d[k] == 0.0)
      throw recurrence_domain_error(
          k, "d_" + std::to_string(k) + " vanishes; alpha_k undefined");
    const double theta = (coeffs.c[k] * coeffs.c[k - 1] / coeffs.d[k]) * f;
    if (!(theta > 1.0) || !std::isfinite(theta))
      throw recurrence_domain_error(
          k, "recurrence leaves the positive momentum domain at k = " +
                 std::to_string(k));
    alphas[k] = 1.0 / (theta - 1.0);
    f = 1.0 - 1.0 / theta;
  }
  return alphas;
}

RecurrenceCoefficients gegenbauer_recurrence(double beta, int k_max) {
  if (k_max < 1)
    throw std::invalid_argument("gegenbauer_recurrence: k_max must be >= 1");
  RecurrenceCoefficients rc;
  rc.c.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  rc.d.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  rc.c[0] = 1.0;
  rc.c[1] = beta + 1.0;
  rc.d[1] = 0.0;
  for (int k = 2; k <= k_max; ++k) {
    rc.c[k] = (2.0 * k + beta - 1.0) / k;
    rc.d[k] = (k + beta - 1.0) / k;
  }
  return rc;
}

RecurrenceCoefficients fista_recurrence(int k_max) {
  if (k_max < 1)
    throw std::invalid_argument("fista_recurrence: k_max must be >= 1");
  RecurrenceCoefficients rc;
  rc.c.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  rc.d.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  // c_k = 1 + t_k / t_{k+1} with t_0 = 0, so c_0 = 1 and d_1 = c_0 - 1 = 0.
  double t = 0.0;       // t_0
  double t_next = 1.0;  // t_1
  for (int k = 0; k <= k_max; ++k) {
    rc.c[k] = 1.0 + t / t_next;
    if (k >= 1) rc.d[k] = rc.c[k - 1] - 1.0;
    t = t_next;
    t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
  }
  return rc;
}

RecurrenceCoefficients hermite_recurrence(int k_max) {
  if (k_max < 1)
    throw std::invalid_argument("hermite_recurrence: k_max must be >= 1");
  RecurrenceCoefficients rc;
  rc.c.assign(static_cast<std::size_t>(k_max) + 1, 2.0);
  rc.d.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (int k = 1; k <= k_max; ++k) rc.d[k] = 2.0 * k;
  return rc;
}

}  // namespace itreg
