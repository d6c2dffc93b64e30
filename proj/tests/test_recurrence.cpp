#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <itreg/momentum.hpp>
#include <itreg/recurrence.hpp>

#include <cmath>
#include <vector>

using namespace itreg;

TEST_CASE("beta-schedule roundtrip through the coefficient map") {
  for (double beta : {0.0, 1.0, 2.0, 4.0}) {
    auto schedule = MomentumSchedule::beta_schedule(beta);
    const int k_max = 100;
    auto alphas = schedule.alphas(k_max);
    auto coeffs = alpha_to_recurrence(alphas, k_max);
    auto back = recurrence_to_alpha(coeffs, k_max);
    for (int k = 1; k <= k_max; ++k)
      CHECK(back[k] == doctest::Approx(alphas[k]).epsilon(1e-12));
  }
}

TEST_CASE("fista roundtrip through the coefficient map") {
  auto schedule = MomentumSchedule::fista();
  const int k_max = 100;
  auto alphas = schedule.alphas(k_max);
  auto coeffs = alpha_to_recurrence(alphas, k_max);
  auto back = recurrence_to_alpha(coeffs, k_max);
  for (int k = 1; k <= k_max; ++k)
    CHECK(back[k] == doctest::Approx(alphas[k]).epsilon(1e-12));
}

TEST_CASE("fista product identity against the t-expression") {
  // (1 + 1/alpha_k)(alpha_{k-1} + 1)
  //   = (t_k/t_{k-1}) (1 + t_k/t_{k+1}) (1 + t_{k-1}/t_k)
  for (int k = 2; k <= 50; ++k) {
    const double ak = fista_alpha(k);
    const double akm1 = fista_alpha(k - 1);
    const double lhs = (1.0 + 1.0 / ak) * (akm1 + 1.0);
    const double tkm1 = fista_t(k - 1);
    const double tk = fista_t(k);
    const double tk1 = fista_t(k + 1);
    const double rhs =
        (tk / tkm1) * (1.0 + tk / tk1) * (1.0 + tkm1 / tk);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("fista canonical coefficients satisfy the constraint") {
  // c_k = 1 + t_k/t_{k+1}, d_k = c_{k-1} - 1
  const int k_max = 50;
  auto coeffs = fista_recurrence(k_max);
  CHECK(coeffs.c[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(coeffs.d[1] == doctest::Approx(0.0).epsilon(1e-15));
  for (int k = 1; k <= k_max; ++k) {
    CHECK(coeffs.c[k] ==
          doctest::Approx(1.0 + fista_t(k) / fista_t(k + 1)).epsilon(1e-13));
    if (k >= 2)
      CHECK(coeffs.d[k] ==
            doctest::Approx(coeffs.c[k - 1] - 1.0).epsilon(1e-13));
  }
  // constraint c_k c_{k-1} / d_k = (1 + 1/alpha_k)(alpha_{k-1} + 1), k >= 2
  for (int k = 2; k <= k_max; ++k) {
    const double lhs = coeffs.c[k] * coeffs.c[k - 1] / coeffs.d[k];
    const double rhs =
        (1.0 + 1.0 / fista_alpha(k)) * (fista_alpha(k - 1) + 1.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  // and the inverse map recovers the fista sequence
  auto back = recurrence_to_alpha(coeffs, k_max);
  for (int k = 1; k <= k_max; ++k)
    CHECK(back[k] == doctest::Approx(fista_alpha(k)).epsilon(1e-12));
}

TEST_CASE("gegenbauer coefficients reproduce the beta-schedule") {
  for (double beta : {0.5, 1.0, 4.0}) {
    const int k_max = 60;
    auto coeffs = gegenbauer_recurrence(beta, k_max);
    // published coefficient formulas for k >= 2
    for (int k = 2; k <= k_max; ++k) {
      CHECK(coeffs.c[k] ==
            doctest::Approx((2.0 * k + beta - 1.0) / k).epsilon(1e-15));
      CHECK(coeffs.d[k] ==
            doctest::Approx((k + beta - 1.0) / k).epsilon(1e-15));
    }
    auto alphas = recurrence_to_alpha(coeffs, k_max);
    CHECK(alphas[1] == 0.0);
    for (int k = 2; k <= k_max; ++k)
      CHECK(alphas[k] ==
            doctest::Approx((k - 1.0) / (k + beta)).epsilon(1e-12));
  }
}

TEST_CASE("hermite coefficients leave the positive domain at k = 2") {
  auto coeffs = hermite_recurrence(20);
  // alpha_1 = 1/(c_1 c_0/d_1 - 1) = 1/(4/2 - 1) = 1 is fine; the exit is at
  // the next step, where alpha_2 = (1 + alpha_1)/(2/2 - alpha_1 - 1) = -2.
  bool threw = false;
  try {
    recurrence_to_alpha(coeffs, 20);
  } catch (const recurrence_domain_error& e) {
    threw = true;
    CHECK(e.offending_index() == 2);
  }
  CHECK(threw);
}

TEST_CASE("alpha_to_recurrence rejects non-positive alphas") {
  std::vector<double> bad{0.0, 0.5, -0.1, 0.3};
  bool threw = false;
  try {
    alpha_to_recurrence(bad, 3);
  } catch (const recurrence_domain_error& e) {
    threw = true;
    CHECK(e.offending_index() == 2);
  }
  CHECK(threw);

  std::vector<double> neg_first{0.0, -0.5, 0.2};
  CHECK_THROWS_AS(alpha_to_recurrence(neg_first, 2),
                  recurrence_domain_error);
}

TEST_CASE("schedule built from a recurrence matches the source sequence") {
  auto coeffs = gegenbauer_recurrence(1.0, 40);
  auto schedule = MomentumSchedule::from_recurrence(coeffs);
  for (int k = 1; k <= 40; ++k)
    CHECK(schedule.alpha(k) ==
          doctest::Approx((k - 1.0) / (k + 1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(schedule.alpha(41), std::length_error);
}
