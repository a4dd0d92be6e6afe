#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cmsr/core.hpp"

namespace cmsr {

struct PassengerEvent {
  PointId point = 0;
  double time = 0.0;  // seconds, real-valued
};

struct TaxiOutcome {
  double cruise_seconds = 0.0;
  bool picked_up = false;
  PointId pickup_point = 0;  // 0 when the route ended without a pickup
};

struct SimReport {
  std::vector<TaxiOutcome> taxis;
  double total_cruise_seconds = 0.0;
  int pickups = 0;
};

// Averages over independently generated day streams.
struct MeanReport {
  double mean_total_cruise_seconds = 0.0;
  double mean_pickups = 0.0;
  std::vector<double> mean_taxi_cruise;
};

// Homogeneous Poisson arrivals per point: cumulative exponential(lambda_c)
// draws truncated at the horizon, merged and sorted by time. One splitmix64
// substream per point, so streams are reproducible across platforms.
std::vector<PassengerEvent> gen_poisson_events(const Instance& inst, double horizon,
                                               std::uint64_t seed);

// Replays an event stream against a recommendation. A still-cruising taxi
// arriving at c at time t picks up iff some event at c lies in
// (last_visit_c, t]; every visit by a still-cruising taxi clears the point's
// waiting passengers. A taxi that exhausts its route cruises for its final
// arrival time plus the penalty. Simultaneous arrivals are served in route
// order, and a taxi that has picked up stops visiting (and stops clearing)
// later points.
SimReport simulate(const Recommendation& rec, const Instance& inst,
                   const std::vector<PassengerEvent>& events);

// Runs n_days independent streams (substreams seed+0 .. seed+n_days-1); every
// method sees the identical streams. Returns per-method means.
std::map<std::string, MeanReport> batch_simulate(
    const std::map<std::string, Recommendation>& rec_by_method, const Instance& inst,
    int n_days, double horizon, std::uint64_t seed);

}  // namespace cmsr
