#include <itreg/momentum.hpp>

#include <cmath>
#include <stdexcept>

namespace itreg {

double fista_t(int k) {
  if (k < 1) throw std::invalid_argument("fista_t: k must be >= 1");
  double t = 1.0;
  for (int j = 1; j < k; ++j) t = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
  return t;
}

double fista_alpha(int k) {
  if (k < 1) throw std::invalid_argument("fista_alpha: k must be >= 1");
  const double tk = fista_t(k);
  const double tk1 = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * tk * tk));
  return (tk - 1.0) / tk1;
}

MomentumSchedule MomentumSchedule::beta_schedule(double beta) {
  if (beta < -1.0)
    throw std::domain_error("MomentumSchedule: beta must be >= -1");
  return MomentumSchedule(Kind::beta_schedule, beta);
}

MomentumSchedule MomentumSchedule::fista() {
  return MomentumSchedule(Kind::fista, 0.0);
}

MomentumSchedule MomentumSchedule::from_recurrence(
    const RecurrenceCoefficients& coeffs) {
  return from_alphas(recurrence_to_alpha(coeffs, coeffs.max_index()));
}

MomentumSchedule MomentumSchedule::from_alphas(std::vector<double> alphas) {
  if (alphas.size() < 2)
    throw std::invalid_argument("MomentumSchedule: need at least alpha_1");
  MomentumSchedule s(Kind::from_recurrence, 0.0);
  s.stored_ = std::move(alphas);
  return s;
}

double MomentumSchedule::alpha(int k) const {
  if (k < 1) throw std::invalid_argument("alpha: k must be >= 1");
  switch (kind_) {
    case Kind::beta_schedule:
      if (k == 1) return 0.0;  // covers beta = -1, where (k-1)/(k+beta) is 0/0
      return (k - 1.0) / (k + beta_);
    case Kind::fista:
      return fista_alpha(k);
    case Kind::from_recurrence:
      if (k >= static_cast<int>(stored_.size()))
        throw std::length_error("alpha: beyond the supplied recurrence range");
      return stored_[k];
  }
  return 0.0;  // unreachable
}

std::vector<double> MomentumSchedule::alphas(int k_max) const {
  if (k_max < 1) throw std::invalid_argument("alphas: k_max must be >= 1");
  std::vector<double> a(static_cast<std::size_t>(k_max) + 1, 0.0);
  switch (kind_) {
    case Kind::beta_schedule:
      for (int k = 2; k <= k_max; ++k) a[k] = (k - 1.0) / (k + beta_);
      break;
    case Kind::fista: {
      double t = 1.0;  // t_1
      for (int k = 1; k <= k_max; ++k) {
        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
        a[k] = (t - 1.0) / t_next;
        t = t_next;
      }
      break;
    }
    case Kind::from_recurrence:
      if (k_max >= static_cast<int>(stored_.size()))
        throw std::length_error("alphas: beyond the supplied recurrence range");
      for (int k = 1; k <= k_max; ++k) a[k] = stored_[k];
      break;
  }
  return a;
}

}  // namespace itreg
