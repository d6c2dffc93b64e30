#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <itreg/stopping.hpp>

#include <stdexcept>
#include <vector>

using namespace itreg;

TEST_CASE("discrepancy helper finds the first crossing") {
  const double delta = 0.1;
  std::vector<double> residuals{5 * delta, 3 * delta, 0.9 * delta};
  CHECK(discrepancy_first_index(residuals, delta, 1.01) == 2);

  // k = 0 already feasible
  std::vector<double> small{0.05};
  CHECK(discrepancy_first_index(small, delta, 1.01) == 0);

  // no crossing
  std::vector<double> large{1.0, 0.9, 0.8};
  CHECK(discrepancy_first_index(large, delta, 1.01) == -1);

  CHECK_THROWS_AS(discrepancy_first_index(residuals, 0.0, 1.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(discrepancy_first_index(residuals, delta, 1.0),
                  std::invalid_argument);
}

TEST_CASE("discrepancy minimality") {
  const double delta = 0.1, tau = 1.5;
  std::vector<double> residuals{1.0, 0.5, 0.2, 0.14, 0.12, 0.05};
  const long k = discrepancy_first_index(residuals, delta, tau);
  REQUIRE(k >= 0);
  CHECK(residuals[k] <= tau * delta);
  for (long j = 0; j < k; ++j) CHECK(residuals[j] > tau * delta);
}

TEST_CASE("rule construction validates parameters") {
  CHECK_THROWS_AS(StoppingRule::discrepancy(1.0), std::invalid_argument);
  CHECK_THROWS_AS(StoppingRule::discrepancy(0.5), std::invalid_argument);
  CHECK_NOTHROW(StoppingRule::discrepancy(1.01));
  CHECK_THROWS_AS(StoppingRule::a_priori(0.0), std::invalid_argument);
  CHECK_THROWS_AS(StoppingRule::a_priori(0.5, 0.0), std::invalid_argument);
  CHECK_NOTHROW(StoppingRule::a_priori(0.75, 1.0));
}

TEST_CASE("a priori index") {
  // optimal branch, mu <= (beta+1)/4: exponent -1/(2 mu + 1)
  CHECK(apriori_stop(1e-5, 0.75, 4.0, 1.0) == 100);
  // suboptimal branch, mu > (beta+1)/4: exponent -1/(mu + (beta+1)/4 + 1)
  CHECK(apriori_stop(1e-4, 0.75, 0.0, 1.0) == 100);
  // doubling C doubles the index up to rounding
  const long k1 = apriori_stop(1e-3, 0.5, 4.0, 1.0);
  const long k2 = apriori_stop(1e-3, 0.5, 4.0, 2.0);
  CHECK(k2 >= 2 * k1 - 1);
  CHECK(k2 <= 2 * k1 + 1);
  // monotone nonincreasing in delta
  long prev = apriori_stop(1e-1, 0.75, 4.0, 1.0);
  for (double delta : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const long k = apriori_stop(delta, 0.75, 4.0, 1.0);
    CHECK(k >= prev);
    prev = k;
  }
  CHECK_THROWS_AS(apriori_stop(0.0, 0.75, 4.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(apriori_stop(1e-3, -0.5, 4.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(apriori_stop(1e-3, 0.75, 4.0, 0.0), std::invalid_argument);
}

TEST_CASE("oracle index") {
  // unimodal sequence: turning point
  std::vector<double> errs{5.0, 3.0, 1.0, 0.5, 0.8, 2.0};
  CHECK(oracle_stop(errs) == 3);
  // constant: smallest index among minimizers
  std::vector<double> flat{1.0, 1.0, 1.0};
  CHECK(oracle_stop(flat) == 0);
  // optimality: every other index is no better
  const long k = oracle_stop(errs);
  for (double e : errs) CHECK(e >= errs[k]);

  CHECK_THROWS_AS(oracle_stop(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("oracle patience window") {
  CHECK(oracle_patience(0) == 100);
  CHECK(oracle_patience(10) == 100);
  CHECK(oracle_patience(200) == 400);
}
