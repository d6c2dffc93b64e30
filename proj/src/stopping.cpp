#include <itreg/stopping.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace itreg {

StoppingRule StoppingRule::discrepancy(double tau) {
  if (!(tau > 1.0))
    throw std::invalid_argument("discrepancy rule requires tau > 1");
  StoppingRule r;
  r.kind = Kind::discrepancy;
  r.tau = tau;
  return r;
}

StoppingRule StoppingRule::a_priori(double mu, double C) {
  if (!(mu > 0.0) || !(C > 0.0))
    throw std::invalid_argument("a priori rule requires mu > 0 and C > 0");
  StoppingRule r;
  r.kind = Kind::a_priori;
  r.mu = mu;
  r.C = C;
  return r;
}

StoppingRule StoppingRule::oracle() {
  StoppingRule r;
  r.kind = Kind::oracle;
  return r;
}

long apriori_stop(double delta, double mu, double beta, double C) {
  if (!(delta > 0.0) || !(mu > 0.0) || !(C > 0.0))
    throw std::invalid_argument("apriori_stop: inputs must be positive");

  const double saturation = 0.25 * (beta + 1.0);
  const double denom =
      mu <= saturation ? 2.0 * mu + 1.0 : mu + saturation + 1.0;
  double raw = C * std::pow(delta, -1.0 / denom);

  // pow can overshoot an exact integer by a few ulps; snap before ceil.
  const double snapped = std::round(raw);
  if (std::abs(raw - snapped) <= 1e-9 * std::max(1.0, std::abs(snapped)))
    raw = snapped;
  return std::max(1L, static_cast<long>(std::ceil(raw)));
}

long discrepancy_first_index(const std::vector<double>& residual_norms,
                             double delta, double tau) {
  if (!(delta > 0.0))
    throw std::invalid_argument("discrepancy principle requires delta > 0");
  if (!(tau > 1.0))
    throw std::invalid_argument("discrepancy principle requires tau > 1");
  const double threshold = tau * delta;
  for (std::size_t k = 0; k < residual_norms.size(); ++k)
    if (residual_norms[k] <= threshold) return static_cast<long>(k);
  return -1;
}

long oracle_stop(const std::vector<double>& error_norms) {
  if (error_norms.empty())
    throw std::invalid_argument("oracle_stop: error norms not recorded");
  std::size_t best = 0;
  for (std::size_t k = 1; k < error_norms.size(); ++k)
    if (error_norms[k] < error_norms[best]) best = k;
  return static_cast<long>(best);
}

long oracle_patience(long k_best) { return std::max(100L, 2 * k_best); }

}  // namespace itreg
