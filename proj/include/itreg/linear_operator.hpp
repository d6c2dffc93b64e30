#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <memory>

namespace itreg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Linear forward map A : X -> Y between finite-dimensional Hilbert spaces,
/// together with its adjoint A* : Y -> X.
///
/// Every implementation certifies ||A*A|| <= 1 through norm_bound(); the
/// solvers rely on this and never perform a step-size search. Operators are
/// immutable after construction, and apply/apply_adjoint are pure, so a
/// single instance may be shared across concurrent solver runs.
class LinearOperator {
public:
  virtual ~LinearOperator() = default;

  virtual Vector apply(const Vector& x) const = 0;
  virtual Vector apply_adjoint(const Vector& y) const = 0;

  virtual Eigen::Index solution_dim() const = 0;
  virtual Eigen::Index data_dim() const = 0;

  /// Certified upper bound on ||A*A||; always <= 1.
  virtual double norm_bound() const = 0;
};

/// Diagonal operator (A x)_n = sigma_n x_n with positive singular values.
class DiagonalOperator final : public LinearOperator {
public:
  /// Requires sigma_n > 0 and max sigma_n^2 <= 1.
  explicit DiagonalOperator(Vector singular_values);

  Vector apply(const Vector& x) const override;
  Vector apply_adjoint(const Vector& y) const override;
  Eigen::Index solution_dim() const override { return sigma_.size(); }
  Eigen::Index data_dim() const override { return sigma_.size(); }
  double norm_bound() const override { return norm_bound_; }

  const Vector& singular_values() const { return sigma_; }

private:
  Vector sigma_;
  double norm_bound_;
};

/// Dense matrix operator. The supplied matrix is rescaled at construction by
/// 1/sqrt(est ||A*A|| * (1 + 1e-6)) so the certified norm bound holds; the
/// applied factor is available through scale().
class DenseOperator final : public LinearOperator {
public:
  explicit DenseOperator(Matrix m);

  Vector apply(const Vector& x) const override;
  Vector apply_adjoint(const Vector& y) const override;
  Eigen::Index solution_dim() const override { return m_.cols(); }
  Eigen::Index data_dim() const override { return m_.rows(); }
  double norm_bound() const override { return 1.0; }

  /// The rescaled matrix actually applied.
  const Matrix& matrix() const { return m_; }
  /// Multiplier applied to the constructor argument.
  double scale() const { return scale_; }

private:
  Matrix m_;
  double scale_;
};

/// Power-iteration estimate of ||A*A|| (largest eigenvalue of A*A).
/// Deterministic: the start vector comes from the given seed.
double power_iteration_norm_sq(const LinearOperator& op, int max_iters = 2000,
                               double tol = 1e-13, std::uint64_t seed = 31);

/// max over random pairs of |<Ax,y> - <x,A*y>| / (||x|| ||y||).
double adjoint_mismatch(const LinearOperator& op, int pairs = 100,
                        std::uint64_t seed = 7);

}  // namespace itreg
