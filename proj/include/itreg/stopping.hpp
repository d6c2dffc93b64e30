#pragma once

#include <vector>

namespace itreg {

/// Interchangeable stopping policies consumed by the solvers.
///
/// discrepancy: stop at the first k with ||A x_k - y_d|| <= tau * delta
///              (k = 0 included); requires tau > 1 and delta > 0.
/// a_priori:    stop at a precomputed index depending on (delta, mu, beta, C).
/// oracle:      stop at the argmin of the true error ||x_k - x_true||; the
///              solver scans until no new minimum has appeared for a patience
///              window of max(100, 2 k_best) iterations.
struct StoppingRule {
  enum class Kind { discrepancy, a_priori, oracle };

  Kind kind = Kind::discrepancy;
  double tau = 1.01;  // discrepancy
  double mu = 0.5;    // a priori
  double C = 1.0;     // a priori

  static StoppingRule discrepancy(double tau);
  static StoppingRule a_priori(double mu, double C = 1.0);
  static StoppingRule oracle();
};

/// A priori stopping index:
///   ceil(C * delta^{-1/(2 mu + 1)})            if mu <= (beta+1)/4,
///   ceil(C * delta^{-1/(mu + (beta+1)/4 + 1)}) otherwise.
/// beta is the effective saturation parameter of the method. Values within
/// 1e-9 of an integer are snapped to it before rounding up, so exact decade
/// inputs produce the intended index. Throws std::invalid_argument on
/// non-positive inputs.
long apriori_stop(double delta, double mu, double beta, double C);

/// First index with residual_norms[k] <= tau * delta, or -1 when none.
long discrepancy_first_index(const std::vector<double>& residual_norms,
                             double delta, double tau);

/// Smallest index attaining the minimum of the recorded error norms.
/// Throws std::invalid_argument when the sequence is empty.
long oracle_stop(const std::vector<double>& error_norms);

/// Scan horizon used by the oracle rule.
long oracle_patience(long k_best);

}  // namespace itreg
