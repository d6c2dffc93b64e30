#pragma once

#include <itreg/linear_operator.hpp>

#include <cstdint>
#include <memory>
#include <utility>

namespace itreg {

/// An inverse problem A x = y with exact solution, exact data, and a noisy
/// data vector whose distance to the exact data equals delta exactly.
struct InverseProblem {
  std::shared_ptr<const LinearOperator> op;
  Vector x_true;   // minimum-norm solution
  Vector y_exact;  // A x_true
  Vector y_noisy;  // y_exact + noise, ||y_noisy - y_exact|| = delta
  double delta = 0.0;
};

/// Diagonal test problem: sigma_n = n^-spectrum_exponent and
/// x_n = (-1)^n n^-solution_exponent (sign factor only when alternating),
/// n = 1..n_max. Throws std::invalid_argument for n_max < 1 or
/// spectrum_exponent <= 0 (which would push singular values above 1).
std::pair<std::shared_ptr<const DiagonalOperator>, Vector>
make_diagonal_problem(int n_max, double spectrum_exponent,
                      double solution_exponent, bool alternating);

/// Discrete solution operator of -u'' = f on (0,1) with homogeneous
/// Dirichlet conditions, on a uniform interior grid of grid_size points,
/// rescaled so ||A*A|| <= 1. The exact solution for example_id in {1,2,3}
/// is constructed spectrally as x = (A*A)^mu w with a fixed seeded
/// unit-norm vector w and smoothness index mu in {1/8, 5/8, 17/8}.
/// Requires grid_size >= 8.
std::pair<std::shared_ptr<const DenseOperator>, Vector>
make_bvp_problem(int grid_size, int example_id);

/// Smoothness index realized by make_bvp_problem for the given example.
double bvp_example_mu(int example_id);

/// Draws i.i.d. standard normal noise e from the seeded generator and sets
/// y_noisy = A x_true + delta * e / ||e||. The recorded noise level is the
/// realized norm ||y_noisy - y_exact|| (within one data-entry rounding of
/// the request), so the stored problem satisfies its level exactly and the
/// discrepancy threshold tau * delta needs no estimation. Deterministic in
/// (seed, delta, dimensions).
InverseProblem add_noise(std::shared_ptr<const LinearOperator> op,
                         const Vector& x_true, double delta,
                         std::uint64_t seed);

}  // namespace itreg
