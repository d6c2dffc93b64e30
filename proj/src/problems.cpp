#include <itreg/problems.hpp>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <stdexcept>

namespace itreg {

std::pair<std::shared_ptr<const DiagonalOperator>, Vector>
make_diagonal_problem(int n_max, double spectrum_exponent,
                      double solution_exponent, bool alternating) {
  if (n_max < 1)
    throw std::invalid_argument("make_diagonal_problem: n_max must be >= 1");
  if (!(spectrum_exponent > 0.0))
    throw std::invalid_argument(
        "make_diagonal_problem: spectrum_exponent must be positive");

  Vector sigma(n_max);
  Vector x_true(n_max);
  for (int n = 1; n <= n_max; ++n) {
    sigma[n - 1] = std::pow(double(n), -spectrum_exponent);
    double v = std::pow(double(n), -solution_exponent);
    if (alternating && (n % 2 == 1)) v = -v;
    x_true[n - 1] = v;
  }
  return {std::make_shared<DiagonalOperator>(std::move(sigma)),
          std::move(x_true)};
}

double bvp_example_mu(int example_id) {
  switch (example_id) {
    case 1: return 1.0 / 8.0;
    case 2: return 5.0 / 8.0;
    case 3: return 17.0 / 8.0;
    default:
      throw std::invalid_argument("bvp example_id must be 1, 2, or 3");
  }
}

std::pair<std::shared_ptr<const DenseOperator>, Vector>
make_bvp_problem(int grid_size, int example_id) {
  const double mu = bvp_example_mu(example_id);
  if (grid_size < 8)
    throw std::invalid_argument("make_bvp_problem: grid_size must be >= 8");

  // Second-order central differences for -u'' on the interior grid,
  // homogeneous Dirichlet conditions. The solution operator is the inverse.
  const int m = grid_size;
  const double h = 1.0 / (m + 1);
  Matrix laplace = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    laplace(i, i) = 2.0 / (h * h);
    if (i + 1 < m) {
      laplace(i, i + 1) = -1.0 / (h * h);
      laplace(i + 1, i) = -1.0 / (h * h);
    }
  }
  Matrix green = laplace.llt().solve(Matrix::Identity(m, m));
  // Symmetrize away the solve's rounding so the adjoint is exact.
  green = 0.5 * (green + green.transpose()).eval();

  auto op = std::make_shared<DenseOperator>(std::move(green));

  // Exact solution with smoothness index mu: x = (A*A)^mu w for a fixed
  // seeded unit-norm w, built from the eigendecomposition of the scaled
  // symmetric operator.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(op->matrix());
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("make_bvp_problem: eigendecomposition failed");
  const Matrix& basis = eig.eigenvectors();
  Vector powers = eig.eigenvalues();
  for (Eigen::Index i = 0; i < powers.size(); ++i) {
    const double a = std::max(powers[i], 0.0);
    powers[i] = std::pow(a * a, mu);
  }

  std::mt19937_64 rng(9000u + static_cast<std::uint64_t>(example_id));
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector w(m);
  for (int i = 0; i < m; ++i) w[i] = normal(rng);
  w /= w.norm();

  Vector x_true = basis * powers.cwiseProduct(basis.transpose() * w);
  return {std::move(op), std::move(x_true)};
}

InverseProblem add_noise(std::shared_ptr<const LinearOperator> op,
                         const Vector& x_true, double delta,
                         std::uint64_t seed) {
  if (!op) throw std::invalid_argument("add_noise: null operator");
  if (delta < 0.0)
    throw std::invalid_argument("add_noise: delta must be non-negative");

  InverseProblem problem;
  problem.x_true = x_true;
  problem.y_exact = op->apply(x_true);

  if (delta == 0.0) {
    problem.y_noisy = problem.y_exact;
    problem.delta = 0.0;
    problem.op = std::move(op);
    return problem;
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector e(problem.y_exact.size());
  double en = 0.0;
  do {  // redraw on an (essentially impossible) zero draw
    for (Eigen::Index i = 0; i < e.size(); ++i) e[i] = normal(rng);
    en = e.norm();
  } while (en == 0.0);

  problem.y_noisy = problem.y_exact + (delta / en) * e;
  // The noise actually stored can deviate from the request by one rounding
  // of the data entries; record the realized level so that
  // ||y_noisy - y_exact|| == delta holds exactly for the problem handed out.
  problem.delta = (problem.y_noisy - problem.y_exact).norm();
  problem.op = std::move(op);
  return problem;
}

}  // namespace itreg
