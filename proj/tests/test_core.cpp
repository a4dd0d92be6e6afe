#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cmsr/core.hpp"
#include "helpers.hpp"

using namespace cmsr;

TEST_SUITE("core") {

TEST_CASE("travel matrix stores asymmetric entries") {
  TravelTimeMatrix m(2);
  m.set(1, 2, 7);
  m.set(2, 1, 11);
  CHECK(m.at(1, 2) == 7);
  CHECK(m.at(2, 1) == 11);
  CHECK(m.at(0, 0) == 0);
}

TEST_CASE("instance validation accepts the worked example") {
  const Instance inst = testing::example_instance();
  CHECK(inst.n_points == 3);
  CHECK(inst.rate(2) == doctest::Approx(0.021));
}

TEST_CASE("instance validation rejects bad rates and travel times") {
  Instance inst = testing::example_instance();
  inst.rates[1] = 0.0;
  CHECK_THROWS_AS(validate_instance(std::move(inst)), std::invalid_argument);

  Instance neg = testing::example_instance();
  neg.travel.set(1, 2, -3);
  CHECK_THROWS_AS(validate_instance(std::move(neg)), std::invalid_argument);

  Instance diag = testing::example_instance();
  diag.travel.set(2, 2, 4);
  CHECK_THROWS_AS(validate_instance(std::move(diag)), std::invalid_argument);

  Instance len = testing::example_instance();
  len.route_len = 9;
  CHECK_THROWS_AS(validate_instance(std::move(len)), std::invalid_argument);
}

TEST_CASE("route validation rejects repeats and bad ids") {
  const Instance inst = testing::example_instance();
  CHECK_THROWS_AS(validate_route(Route{{1, 1}}, inst.n_points), std::invalid_argument);
  CHECK_THROWS_AS(validate_route(Route{{0}}, inst.n_points), std::invalid_argument);
  CHECK_THROWS_AS(validate_route(Route{{4}}, inst.n_points), std::invalid_argument);
  CHECK_THROWS_AS(validate_route(Route{{1, 2, 3, 1}}, inst.n_points), std::invalid_argument);
  CHECK_NOTHROW(validate_route(Route{{3, 1}}, inst.n_points));
  CHECK_NOTHROW(validate_route(Route{}, inst.n_points));
}

TEST_CASE("recommendation may repeat routes across taxis") {
  const Instance inst = testing::example_instance();
  Recommendation rec{{Route{{1, 2}}, Route{{1, 2}}}};
  CHECK_NOTHROW(validate_recommendation(rec, inst.n_points));
}

TEST_CASE("arrival times for the worked example") {
  const Instance inst = testing::example_instance();
  const auto tuples = arrival_times(testing::example_recommendation(), inst.travel);
  REQUIRE(tuples.size() == 6);

  // (t, k, u) sorted: 10,12,20,27,35,47.
  CHECK(tuples[0].t == 10);
  CHECK(tuples[0].k == 0);
  CHECK(tuples[0].u == 1);
  CHECK(tuples[0].c == 1);

  CHECK(tuples[1].t == 12);
  CHECK(tuples[1].k == 1);
  CHECK(tuples[1].c == 2);

  CHECK(tuples[2].t == 20);
  CHECK(tuples[2].k == 0);
  CHECK(tuples[2].u == 2);
  CHECK(tuples[2].c == 2);

  CHECK(tuples[3].t == 27);
  CHECK(tuples[3].k == 1);
  CHECK(tuples[3].c == 1);

  CHECK(tuples[4].t == 35);
  CHECK(tuples[4].k == 0);
  CHECK(tuples[4].c == 3);

  CHECK(tuples[5].t == 47);
  CHECK(tuples[5].k == 1);
  CHECK(tuples[5].c == 3);
}

TEST_CASE("arrival times are a sorted permutation of all visits") {
  const Instance inst = testing::example_instance_l4();
  const auto rec = testing::random_partial_rec(inst, {4, 2, 3}, 77);
  const auto tuples = arrival_times(rec, inst.travel);

  std::size_t expect = 0;
  for (const auto& r : rec.routes) expect += r.points.size();
  REQUIRE(tuples.size() == expect);

  for (std::size_t i = 1; i < tuples.size(); ++i) {
    const bool ordered = tuples[i - 1].t < tuples[i].t ||
                         (tuples[i - 1].t == tuples[i].t && tuples[i - 1].k < tuples[i].k);
    CHECK(ordered);
  }

  // Per-route positions must climb 1..len with cumulative times.
  for (std::size_t k = 0; k < rec.routes.size(); ++k) {
    std::vector<const VisitTuple*> mine;
    for (const auto& tup : tuples)
      if (tup.k == static_cast<int>(k)) mine.push_back(&tup);
    REQUIRE(mine.size() == rec.routes[k].points.size());
    std::sort(mine.begin(), mine.end(),
              [](const VisitTuple* a, const VisitTuple* b) { return a->u < b->u; });
    std::int64_t t = 0;
    PointId prev = 0;
    for (std::size_t pos = 0; pos < mine.size(); ++pos) {
      CHECK(mine[pos]->u == static_cast<int>(pos) + 1);
      CHECK(mine[pos]->c == rec.routes[k].points[pos]);
      t += inst.travel.at(prev, rec.routes[k].points[pos]);
      CHECK(mine[pos]->t == t);
      prev = rec.routes[k].points[pos];
    }
  }
}

TEST_CASE("equal arrival times break ties by route index") {
  Instance inst;
  inst.n_points = 2;
  inst.rates = {0.01, 0.01};
  inst.travel = TravelTimeMatrix(2);
  inst.travel.set(0, 1, 5);
  inst.travel.set(0, 2, 5);
  inst.travel.set(1, 2, 5);
  inst.travel.set(2, 1, 5);
  inst.penalty = 100;
  inst.route_len = 2;
  inst.fleet = 2;
  inst = validate_instance(std::move(inst));

  const Recommendation rec{{Route{{1}}, Route{{2}}}};
  const auto tuples = arrival_times(rec, inst.travel);
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0].t == 5);
  CHECK(tuples[1].t == 5);
  CHECK(tuples[0].k == 0);
  CHECK(tuples[1].k == 1);
}

}  // TEST_SUITE
