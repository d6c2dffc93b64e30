#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <itreg/problems.hpp>

#include <cmath>

using namespace itreg;

TEST_CASE("diagonal problem construction") {
  SUBCASE("paper setup n = 1000") {
    auto [op, xt] = make_diagonal_problem(1000, 2.0, 4.0, true);
    CHECK(op->singular_values()[0] == 1.0);
    CHECK(op->singular_values()[9] == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(xt[0] == -1.0);  // (-1)^1 * 1
    CHECK(xt[1] == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    CHECK(op->norm_bound() <= 1.0);
  }
  SUBCASE("single component") {
    auto [op, xt] = make_diagonal_problem(1, 2.0, 4.0, true);
    CHECK(op->singular_values().size() == 1);
    CHECK(op->singular_values()[0] == 1.0);
    CHECK(xt[0] == -1.0);
  }
  SUBCASE("non-alternating") {
    auto [op, xt] = make_diagonal_problem(3, 1.0, 2.0, false);
    CHECK(op->singular_values()[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(op->singular_values()[2] ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(xt[0] == 1.0);
    CHECK(xt[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(xt[2] == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  }
  SUBCASE("invalid arguments") {
    CHECK_THROWS_AS(make_diagonal_problem(0, 2.0, 4.0, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_diagonal_problem(10, 0.0, 4.0, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_diagonal_problem(10, -0.5, 4.0, true),
                    std::invalid_argument);
  }
}

TEST_CASE("diagonal operator validates its spectrum") {
  Vector ok(2);
  ok << 1.0, 0.5;
  CHECK_NOTHROW(DiagonalOperator{ok});
  Vector too_big(2);
  too_big << 1.5, 0.5;
  CHECK_THROWS_AS(DiagonalOperator{too_big}, std::invalid_argument);
  Vector nonpos(2);
  nonpos << 0.5, 0.0;
  CHECK_THROWS_AS(DiagonalOperator{nonpos}, std::invalid_argument);
}

TEST_CASE("adjoint consistency and norm bound for constructed operators") {
  auto [diag, xt1] = make_diagonal_problem(100, 2.0, 4.0, true);
  auto [bvp, xt2] = make_bvp_problem(16, 1);

  for (const LinearOperator* op :
       {static_cast<const LinearOperator*>(diag.get()),
        static_cast<const LinearOperator*>(bvp.get())}) {
    CHECK(adjoint_mismatch(*op, 100) <= 1e-10);
    CHECK(power_iteration_norm_sq(*op) <= 1.0 + 1e-8);
  }

  // generic dense operator with an asymmetric matrix
  Matrix m(3, 2);
  m << 4.0, -1.0, 2.0, 0.5, -3.0, 7.0;
  DenseOperator dense(m);
  CHECK(adjoint_mismatch(dense, 100) <= 1e-10);
  CHECK(power_iteration_norm_sq(dense) <= 1.0 + 1e-8);
}

TEST_CASE("bvp problem construction") {
  SUBCASE("smallest valid grid") {
    auto [op, xt] = make_bvp_problem(8, 1);
    CHECK(op->matrix().rows() == 8);
    CHECK(power_iteration_norm_sq(*op) <= 1.0 + 1e-8);
    CHECK(xt.size() == 8);
  }
  SUBCASE("operator is symmetric") {
    auto [op, xt] = make_bvp_problem(32, 2);
    CHECK((op->matrix() - op->matrix().transpose()).cwiseAbs().maxCoeff() ==
          0.0);
    // positive definite: <Av, v> > 0 on a test vector
    Vector v = Vector::LinSpaced(32, 1.0, 2.0);
    CHECK(v.dot(op->apply(v)) > 0.0);
  }
  SUBCASE("lowest mode of the unscaled solution operator") {
    // A_raw sin(pi t) = (1/pi^2) sin(pi t) up to discretization error <= 1%
    const int m = 1000;
    auto [op, xt] = make_bvp_problem(m, 2);
    const double h = 1.0 / (m + 1);
    Vector v(m);
    for (int i = 0; i < m; ++i) v[i] = std::sin(M_PI * (i + 1) * h);
    Vector image = op->apply(v) / op->scale();  // undo the normalization
    Vector expect = v / (M_PI * M_PI);
    CHECK((image - expect).norm() <= 0.01 * expect.norm());
  }
  SUBCASE("invalid arguments") {
    CHECK_THROWS_AS(make_bvp_problem(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_bvp_problem(32, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_bvp_problem(32, 0), std::invalid_argument);
  }
  SUBCASE("deterministic solutions") {
    auto [op1, xa] = make_bvp_problem(16, 3);
    auto [op2, xb] = make_bvp_problem(16, 3);
    CHECK((xa - xb).norm() == 0.0);
  }
}

TEST_CASE("add_noise") {
  auto [op, xt] = make_diagonal_problem(50, 2.0, 4.0, true);

  SUBCASE("zero noise is exact") {
    auto p = add_noise(op, xt, 0.0, 7);
    CHECK((p.y_noisy - p.y_exact).norm() == 0.0);
    CHECK(p.delta == 0.0);
  }
  SUBCASE("noise level is hit exactly") {
    for (double delta : {1e-1, 1e-3, 1e-5}) {
      auto p = add_noise(op, xt, delta, 3);
      const double realized = (p.y_noisy - p.y_exact).norm();
      CHECK(realized / p.delta == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(p.delta == doctest::Approx(delta).epsilon(1e-9));
    }
  }
  SUBCASE("deterministic in the seed") {
    auto a = add_noise(op, xt, 1e-2, 42);
    auto b = add_noise(op, xt, 1e-2, 42);
    for (Eigen::Index i = 0; i < a.y_noisy.size(); ++i)
      CHECK(a.y_noisy[i] == b.y_noisy[i]);
    auto c = add_noise(op, xt, 1e-2, 43);
    CHECK((a.y_noisy - c.y_noisy).norm() > 0.0);
  }
  SUBCASE("exact data consistency") {
    auto p = add_noise(op, xt, 1e-3, 5);
    CHECK((p.y_exact - p.op->apply(p.x_true)).norm() <=
          1e-12 * p.y_exact.norm());
  }
  SUBCASE("negative delta rejected") {
    CHECK_THROWS_AS(add_noise(op, xt, -1.0, 1), std::invalid_argument);
  }
}
