#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "cmsr/collective.hpp"
#include "cmsr/simulate.hpp"
#include "helpers.hpp"

using namespace cmsr;

TEST_SUITE("simulate") {

TEST_CASE("event streams are reproducible, sorted, and inside the horizon") {
  const Instance inst = testing::example_instance();
  const auto a = gen_poisson_events(inst, 7200.0, 42);
  const auto b = gen_poisson_events(inst, 7200.0, 42);
  const auto c = gen_poisson_events(inst, 7200.0, 43);

  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].point == b[i].point);
    CHECK(a[i].time == b[i].time);
  }
  bool differs = a.size() != c.size();
  for (std::size_t i = 0; !differs && i < a.size(); ++i) differs = a[i].time != c[i].time;
  CHECK(differs);

  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].time > 0.0);
    CHECK(a[i].time <= 7200.0);
    if (i > 0) CHECK(a[i - 1].time <= a[i].time);
    CHECK(a[i].point >= 1);
    CHECK(a[i].point <= 3);
  }

  CHECK_THROWS_AS(gen_poisson_events(inst, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_poisson_events(inst, -5.0, 1), std::invalid_argument);
}

TEST_CASE("event counts have Poisson mean and dispersion") {
  Instance inst;
  inst.n_points = 1;
  inst.rates = {0.01};
  inst.travel = TravelTimeMatrix(1);
  inst.travel.set(0, 1, 10);
  inst.penalty = 100;
  inst.route_len = 1;
  inst.fleet = 1;
  inst = validate_instance(std::move(inst));

  const int reps = 600;
  const double horizon = 3600.0;  // rate * horizon = 36
  double sum = 0.0, sumsq = 0.0;
  for (int r = 0; r < reps; ++r) {
    const double n = static_cast<double>(gen_poisson_events(inst, horizon, 5000 + r).size());
    sum += n;
    sumsq += n * n;
  }
  const double mean = sum / reps;
  const double var = sumsq / reps - mean * mean;
  CHECK(std::fabs(mean - 36.0) < 1.5);          // 3 sigma ~ 0.73
  CHECK(var / mean > 0.8);                      // index of dispersion ~ 1
  CHECK(var / mean < 1.25);
}

TEST_CASE("replay hands each passenger to the earliest qualified taxi") {
  const Instance inst = testing::example_instance();
  const Recommendation rec = testing::example_recommendation();
  // Taxi 1 reaches point 2 at t=20, taxi 2 reaches it at t=12.
  const std::vector<PassengerEvent> events{{2, 11.0}, {2, 13.0}};

  const SimReport report = simulate(rec, inst, events);
  REQUIRE(report.taxis.size() == 2);
  CHECK(report.taxis[1].picked_up);
  CHECK(report.taxis[1].pickup_point == 2);
  CHECK(report.taxis[1].cruise_seconds == doctest::Approx(12.0));
  CHECK(report.taxis[0].picked_up);
  CHECK(report.taxis[0].pickup_point == 2);
  CHECK(report.taxis[0].cruise_seconds == doctest::Approx(20.0));
  CHECK(report.pickups == 2);
  CHECK(report.total_cruise_seconds == doctest::Approx(32.0));
}

TEST_CASE("a passenger arriving exactly at the visit second is served") {
  const Instance inst = testing::example_instance();
  const Recommendation rec{{Route{{1}}}};
  const SimReport report = simulate(rec, inst, {{1, 10.0}});
  CHECK(report.taxis[0].picked_up);
  CHECK(report.taxis[0].cruise_seconds == doctest::Approx(10.0));
}

TEST_CASE("a visit clears all waiting passengers, not just the one served") {
  Instance inst = testing::example_instance();
  const Recommendation rec{{Route{{1}}, Route{{1}}}};
  // Both passengers waited at point 1; both taxis arrive at t=10. The first
  // taxi serves one and sweeps the backlog, so the second leaves empty.
  const SimReport report = simulate(rec, inst, {{1, 3.0}, {1, 7.0}});
  CHECK(report.taxis[0].picked_up);
  CHECK(report.taxis[0].cruise_seconds == doctest::Approx(10.0));
  CHECK(!report.taxis[1].picked_up);
  CHECK(report.taxis[1].cruise_seconds == doctest::Approx(10.0 + 500.0));
}

TEST_CASE("passengers who arrived before the fleet departed are gone") {
  const Instance inst = testing::example_instance();
  const Recommendation rec{{Route{{1}}}};
  const SimReport report = simulate(rec, inst, {{1, 0.0}});
  CHECK(!report.taxis[0].picked_up);
  CHECK(report.taxis[0].cruise_seconds == doctest::Approx(510.0));
}

TEST_CASE("a taxi that picked up stops visiting and clearing") {
  const Instance inst = testing::example_instance();
  // Taxi 1 route (1,2): picks up at point 1 at t=10 and never reaches point
  // 2, so the t=15 passenger there is still waiting for taxi 2 at t=27.
  const Recommendation rec{{Route{{1, 2}}, Route{{3, 2}}}};
  const std::vector<PassengerEvent> events{{1, 5.0}, {2, 15.0}};
  const SimReport report = simulate(rec, inst, events);
  CHECK(report.taxis[0].picked_up);
  CHECK(report.taxis[0].pickup_point == 1);
  CHECK(report.taxis[0].cruise_seconds == doctest::Approx(10.0));
  CHECK(report.taxis[1].picked_up);
  CHECK(report.taxis[1].pickup_point == 2);
  // route (3,2): 18 seconds to point 3, then 30 more to point 2
  CHECK(report.taxis[1].cruise_seconds == doctest::Approx(48.0));
}

TEST_CASE("empty and exhausted routes pay the penalty") {
  const Instance inst = testing::example_instance();
  const Recommendation rec{{Route{{1, 2}}, Route{}}};
  const SimReport report = simulate(rec, inst, {});
  CHECK(!report.taxis[0].picked_up);
  CHECK(report.taxis[0].cruise_seconds == doctest::Approx(20.0 + 500.0));
  CHECK(!report.taxis[1].picked_up);
  CHECK(report.taxis[1].cruise_seconds == doctest::Approx(500.0));
  CHECK(report.pickups == 0);
}

TEST_CASE("replay validates its inputs") {
  const Instance inst = testing::example_instance();
  const Recommendation rec = testing::example_recommendation();
  CHECK_THROWS_AS(simulate(rec, inst, {{9, 5.0}}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(rec, inst, {{1, 5.0}, {1, 4.0}}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(Recommendation{{Route{{1, 1}}}}, inst, {}), std::invalid_argument);
}

TEST_CASE("batch means give every method the identical streams") {
  const Instance inst = testing::example_instance();
  std::map<std::string, Recommendation> methods{
      {"a", testing::example_recommendation()},
      {"b", testing::example_recommendation()},
      {"solo", Recommendation{{Route{{2, 1, 3}}}}},
  };
  const auto means = batch_simulate(methods, inst, 50, 600.0, 7);
  REQUIRE(means.size() == 3);
  CHECK(means.at("a").mean_total_cruise_seconds ==
        doctest::Approx(means.at("b").mean_total_cruise_seconds));
  CHECK(means.at("a").mean_pickups == doctest::Approx(means.at("b").mean_pickups));
  REQUIRE(means.at("a").mean_taxi_cruise.size() == 2);
  REQUIRE(means.at("solo").mean_taxi_cruise.size() == 1);

  const auto again = batch_simulate(methods, inst, 50, 600.0, 7);
  CHECK(means.at("a").mean_total_cruise_seconds ==
        doctest::Approx(again.at("a").mean_total_cruise_seconds));

  CHECK_THROWS_AS(batch_simulate(methods, inst, 0, 600.0, 7), std::invalid_argument);
}

TEST_CASE("long-run replay average approaches the model expectation") {
  const Instance inst = testing::example_instance();
  const Recommendation rec = testing::example_recommendation();
  const double model_f = evaluate_se(rec, inst);

  const int days = 500;
  double sum = 0.0, sumsq = 0.0;
  for (int d = 0; d < days; ++d) {
    const auto events = gen_poisson_events(inst, 60.0, 31000 + d);
    const double f = simulate(rec, inst, events).total_cruise_seconds;
    sum += f;
    sumsq += f * f;
  }
  const double mean = sum / days;
  const double var = (sumsq / days - mean * mean) * days / (days - 1);
  const double sigma = std::sqrt(var / days);
  CHECK(std::fabs(mean - model_f) < 3.0 * sigma + 1e-9);
}

}  // TEST_SUITE
