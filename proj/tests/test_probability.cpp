#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cmsr/probability.hpp"
#include "helpers.hpp"

using namespace cmsr;

TEST_SUITE("probability") {

TEST_CASE("pickup probability basics") {
  CHECK(pickup_prob(0.5, 0.0) == 0.0);
  CHECK(pickup_prob(0.01, 100.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  CHECK(pickup_prob(2.0, 1e9) == doctest::Approx(1.0));
  CHECK_THROWS_AS(pickup_prob(0.5, -1.0), std::invalid_argument);
}

TEST_CASE("pickup probability is monotone in both arguments") {
  double prev = -1.0;
  for (double d = 0.0; d <= 400.0; d += 40.0) {
    const double p = pickup_prob(0.004, d);
    CHECK(p > prev);
    prev = p;
  }
  CHECK(pickup_prob(0.002, 120.0) < pickup_prob(0.003, 120.0));
}

TEST_CASE("small-delta accuracy avoids cancellation") {
  // 1 - exp(-x) ~ x for tiny x; a naive formulation loses most digits here.
  const double lambda = 1e-9;
  const double delta = 1e-3;
  CHECK(pickup_prob(lambda, delta) == doctest::Approx(1e-12).epsilon(1e-9));
}

TEST_CASE("memorylessness: waiting in two spells equals one") {
  const double lambda = 0.0137;
  const double a = 63.0, b = 301.0;
  const double joint = 1.0 - (1.0 - pickup_prob(lambda, a)) * (1.0 - pickup_prob(lambda, b));
  CHECK(std::fabs(joint - pickup_prob(lambda, a + b)) < 1e-12);
}

TEST_CASE("model returns zero for the start point") {
  const Instance inst = testing::example_instance();
  const PickupModel model(inst);
  CHECK(model.prob(0, 1000.0) == 0.0);
  CHECK(model.prob(1, 10.0) == doctest::Approx(testing::prob_of(0.013, 10.0)));
  CHECK(model.prob(3, 0.0) == 0.0);
}

TEST_CASE("rate estimation from inter-arrival gaps") {
  // Three gaps summing to 60 seconds -> (3 - 1) / 60.
  CHECK(estimate_rate({10.0, 20.0, 30.0}) == doctest::Approx(1.0 / 30.0));
  CHECK(estimate_rate({10.0, 10.0}) == doctest::Approx(0.05));
  CHECK_THROWS_AS(estimate_rate({42.0}), std::invalid_argument);
  CHECK_THROWS_AS(estimate_rate({10.0, 0.0}), std::invalid_argument);
}

}  // TEST_SUITE
