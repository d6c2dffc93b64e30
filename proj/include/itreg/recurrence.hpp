#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace itreg {

/// Coefficients of a three-term recurrence
///   P_{k+1}(x) = c_k x P_k(x) - d_k P_{k-1}(x),  P_0 = 1,  P_1 = c_0 x.
///
/// Storage: c[k] = c_k for k = 0..max_index, d[k] = d_k for k = 1..max_index
/// (d[0] is unused). The convention d_1 = 0 encodes a momentum sequence with
/// alpha_1 = 0, for which P_1 is unconstrained.
struct RecurrenceCoefficients {
  std::vector<double> c;
  std::vector<double> d;

  int max_index() const { return static_cast<int>(c.size()) - 1; }
};

/// Thrown when a coefficient family leaves the domain of valid momentum
/// sequences (alpha_k <= 0 or a division by zero) at some index.
class recurrence_domain_error : public std::domain_error {
public:
  recurrence_domain_error(int k, const std::string& what)
      : std::domain_error(what), k_(k) {}
  int offending_index() const { return k_; }

private:
  int k_;
};

/// Canonical coefficient family for a momentum sequence: fixes d_k = 1 for
/// k >= 2 and c_0 = 1, then solves the constraint
///   c_1 c_0 / d_1 = 1 + 1/alpha_1,
///   c_k c_{k-1} / d_k = (1 + 1/alpha_k)(alpha_{k-1} + 1),  k >= 2,
/// for c_k. A leading alpha_1 = 0 is encoded as d_1 = 0 with c_1 = 1.
/// Input indexing: alphas[k] = alpha_k for k = 1..k_max (alphas[0] ignored).
/// Throws recurrence_domain_error if alpha_1 < 0 or alpha_k <= 0 for k >= 2.
RecurrenceCoefficients alpha_to_recurrence(const std::vector<double>& alphas,
                                           int k_max);

/// Inverse map: recovers alpha_1..alpha_k_max from coefficient sequences via
///   theta_1 = c_1 c_0 / d_1,
///   theta_k = (c_k c_{k-1} / d_k)(1 - 1/theta_{k-1}),
///   alpha_k = 1/(theta_k - 1),
/// with d_1 = 0 read as theta_1 = infinity, i.e. alpha_1 = 0. Throws
/// recurrence_domain_error naming the first k where alpha_k would be
/// non-positive or undefined. Result indexing matches alpha_to_recurrence.
std::vector<double> recurrence_to_alpha(const RecurrenceCoefficients& coeffs,
                                        int k_max);

/// Gegenbauer family C_k^{((beta+1)/2)}: c_k = (2k+beta-1)/k and
/// d_k = (k+beta-1)/k for k >= 2, anchored at c_0 = 1, c_1 = beta+1,
/// d_1 = 0 (the alpha_1 = 0 convention).
RecurrenceCoefficients gegenbauer_recurrence(double beta, int k_max);

/// Family matching the FISTA momentum sequence: c_k = 1 + t_k/t_{k+1} with
/// t_0 = 0, and d_k = c_{k-1} - 1 (so d_1 = 0).
RecurrenceCoefficients fista_recurrence(int k_max);

/// Hermite polynomials: c_k = 2, d_k = 2k. The induced momentum sequence
/// leaves the positive domain at k = 2; recurrence_to_alpha reports it.
RecurrenceCoefficients hermite_recurrence(int k_max);

}  // namespace itreg
