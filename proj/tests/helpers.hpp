#pragma once

#include <cmath>
#include <vector>

#include "cmsr/core.hpp"
#include "cmsr/gen.hpp"
#include "cmsr/rng.hpp"

namespace cmsr::testing {

// Two-route worked example used across the collective tests: routes (1,2,3)
// and (2,1,3) with arrival times 10/20/35 and 12/27/47.
inline Instance example_instance() {
  Instance inst;
  inst.n_points = 3;
  inst.rates = {0.013, 0.021, 0.008};
  inst.travel = TravelTimeMatrix(3);
  inst.travel.set(0, 1, 10);
  inst.travel.set(0, 2, 12);
  inst.travel.set(0, 3, 18);
  inst.travel.set(1, 2, 10);
  inst.travel.set(1, 3, 20);
  inst.travel.set(2, 1, 15);
  inst.travel.set(2, 3, 15);
  inst.travel.set(3, 1, 25);
  inst.travel.set(3, 2, 30);
  inst.penalty = 500;
  inst.route_len = 3;
  inst.fleet = 2;
  return validate_instance(std::move(inst));
}

inline Recommendation example_recommendation() {
  return Recommendation{{Route{{1, 2, 3}}, Route{{2, 1, 3}}}};
}

// The same geometry extended by a fourth point so both routes have length 4.
inline Instance example_instance_l4() {
  Instance inst;
  inst.n_points = 4;
  inst.rates = {0.013, 0.021, 0.008, 0.017};
  inst.travel = TravelTimeMatrix(4);
  inst.travel.set(0, 1, 10);
  inst.travel.set(0, 2, 12);
  inst.travel.set(0, 3, 18);
  inst.travel.set(0, 4, 40);
  inst.travel.set(1, 2, 10);
  inst.travel.set(1, 3, 20);
  inst.travel.set(1, 4, 30);
  inst.travel.set(2, 1, 15);
  inst.travel.set(2, 3, 15);
  inst.travel.set(2, 4, 35);
  inst.travel.set(3, 1, 25);
  inst.travel.set(3, 2, 30);
  inst.travel.set(3, 4, 25);
  inst.travel.set(4, 1, 28);
  inst.travel.set(4, 2, 33);
  inst.travel.set(4, 3, 27);
  inst.penalty = 500;
  inst.route_len = 4;
  inst.fleet = 2;
  return validate_instance(std::move(inst));
}

inline double prob_of(double lambda, double delta) { return -std::expm1(-lambda * delta); }

// Random recommendation with the given route lengths (distinct points within
// each route, duplicates across routes possible).
inline Recommendation random_partial_rec(const Instance& inst,
                                         const std::vector<int>& lengths,
                                         std::uint64_t seed) {
  SplitMix64 rng(seed);
  Recommendation rec;
  std::vector<PointId> pool(inst.n_points);
  for (int len : lengths) {
    for (int i = 0; i < inst.n_points; ++i) pool[i] = i + 1;
    Route route;
    for (int pos = 0; pos < len; ++pos) {
      const std::size_t pick =
          pos + static_cast<std::size_t>(rng.next_below(inst.n_points - pos));
      std::swap(pool[pos], pool[pick]);
      route.points.push_back(pool[pos]);
    }
    rec.routes.push_back(std::move(route));
  }
  return rec;
}

}  // namespace cmsr::testing
