#include <itreg/linear_operator.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

namespace itreg {

namespace {

Vector seeded_gaussian(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

}  // namespace

DiagonalOperator::DiagonalOperator(Vector singular_values)
    : sigma_(std::move(singular_values)) {
  if (sigma_.size() == 0)
    throw std::invalid_argument("DiagonalOperator: empty spectrum");
  double max_sq = 0.0;
  for (Eigen::Index i = 0; i < sigma_.size(); ++i) {
    if (!(sigma_[i] > 0.0))
      throw std::invalid_argument(
          "DiagonalOperator: singular values must be positive");
    max_sq = std::max(max_sq, sigma_[i] * sigma_[i]);
  }
  if (max_sq > 1.0)
    throw std::invalid_argument("DiagonalOperator: max sigma^2 exceeds 1");
  norm_bound_ = max_sq;
}

Vector DiagonalOperator::apply(const Vector& x) const {
  return sigma_.cwiseProduct(x);
}

Vector DiagonalOperator::apply_adjoint(const Vector& y) const {
  return sigma_.cwiseProduct(y);
}

DenseOperator::DenseOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.cols() == 0)
    throw std::invalid_argument("DenseOperator: empty matrix");

  // Estimate ||M*M|| on the unscaled matrix, then scale so the certified
  // bound ||A*A|| <= 1 holds with a 1e-6 margin.
  struct Raw final : LinearOperator {
    const Matrix& m;
    explicit Raw(const Matrix& mm) : m(mm) {}
    Vector apply(const Vector& x) const override { return m * x; }
    Vector apply_adjoint(const Vector& y) const override {
      return m.transpose() * y;
    }
    Eigen::Index solution_dim() const override { return m.cols(); }
    Eigen::Index data_dim() const override { return m.rows(); }
    double norm_bound() const override { return 1.0; }
  } raw(m_);

  const double lambda_max = power_iteration_norm_sq(raw);
  if (!(lambda_max > 0.0))
    throw std::invalid_argument("DenseOperator: zero operator");
  scale_ = 1.0 / std::sqrt(lambda_max * (1.0 + 1e-6));
  m_ *= scale_;
}

Vector DenseOperator::apply(const Vector& x) const { return m_ * x; }

Vector DenseOperator::apply_adjoint(const Vector& y) const {
  return m_.transpose() * y;
}

double power_iteration_norm_sq(const LinearOperator& op, int max_iters,
                               double tol, std::uint64_t seed) {
  Vector v = seeded_gaussian(op.solution_dim(), seed);
  double vn = v.norm();
  if (vn == 0.0) return 0.0;
  v /= vn;

  double rho = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    Vector w = op.apply_adjoint(op.apply(v));
    const double rho_new = v.dot(w);
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    v = w / wn;
    if (it > 0 && std::abs(rho_new - rho) <= tol * std::abs(rho_new)) {
      return rho_new;
    }
    rho = rho_new;
  }
  return rho;
}

double adjoint_mismatch(const LinearOperator& op, int pairs,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double worst = 0.0;
  for (int p = 0; p < pairs; ++p) {
    Vector x(op.solution_dim());
    Vector y(op.data_dim());
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = normal(rng);
    for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = normal(rng);
    const double lhs = op.apply(x).dot(y);
    const double rhs = x.dot(op.apply_adjoint(y));
    const double denom = x.norm() * y.norm();
    if (denom > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / denom);
  }
  return worst;
}

}  // namespace itreg
