#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmsr {

// Pick-up points are 1..N; id 0 is the shared initial position of the fleet
// and never appears inside a route.
using PointId = std::int32_t;

// (N+1)x(N+1) travel times in integer seconds. Diagonal entries are zero.
// The matrix is directional: at(a, b) need not equal at(b, a).
class TravelTimeMatrix {
 public:
  TravelTimeMatrix() = default;
  explicit TravelTimeMatrix(int n_points)
      : n_(n_points),
        entries_(static_cast<std::size_t>(n_points + 1) * (n_points + 1), 0) {}

  int n_points() const { return n_; }

  std::int64_t at(PointId a, PointId b) const {
    return entries_[static_cast<std::size_t>(a) * (n_ + 1) + b];
  }
  void set(PointId a, PointId b, std::int64_t seconds) {
    entries_[static_cast<std::size_t>(a) * (n_ + 1) + b] = seconds;
  }

 private:
  int n_ = 0;
  std::vector<std::int64_t> entries_;
};

// A directed sequence of distinct pick-up points. Routes may be shorter than
// the instance's route_len while a recommendation is under construction; the
// empty route is the greedy algorithm's seed state.
struct Route {
  std::vector<PointId> points;

  int size() const { return static_cast<int>(points.size()); }
  bool empty() const { return points.empty(); }
  bool contains(PointId c) const {
    for (PointId p : points)
      if (p == c) return true;
    return false;
  }
};

// An ordered multiset of routes, one per taxi. Order matters: when two taxis
// reach a point at the same second, the lower-indexed route's taxi is treated
// as arriving earlier. Duplicate routes across taxis are legal.
struct Recommendation {
  std::vector<Route> routes;

  int k() const { return static_cast<int>(routes.size()); }
};

// Problem instance. rates[c-1] is the Poisson passenger-arrival rate of point
// c in events/second; penalty is the cruising-time surcharge for a taxi that
// finishes its route without a pickup.
struct Instance {
  int n_points = 0;               // N
  std::vector<double> rates;      // size N, indexed by point id - 1
  TravelTimeMatrix travel;        // (N+1)x(N+1)
  std::int64_t penalty = 0;       // seconds
  int route_len = 0;              // L
  int fleet = 0;                  // K

  double rate(PointId c) const { return rates[static_cast<std::size_t>(c) - 1]; }
};

// Per-taxi stopping position. u[k] in {1, ..., l_k + 1} where l_k is the
// length of route k; u[k] == l_k + 1 encodes failure along the whole route.
using OutcomeVector = std::vector<int>;

// One (route, position) visit. k is the 0-based route index, u the 1-based
// position within the route, t the arrival time counted from the common
// departure at point 0 at time 0.
struct VisitTuple {
  int k = 0;
  int u = 0;
  PointId c = 0;
  std::int64_t t = 0;
};

// Checks every instance invariant and returns the instance unchanged, or
// throws std::invalid_argument naming the first violation.
Instance validate_instance(Instance inst);

// Throws if a route repeats a point, contains point 0, or references an id
// outside 1..n_points.
void validate_route(const Route& route, int n_points);
void validate_recommendation(const Recommendation& rec, int n_points);

// All visit tuples of a recommendation, sorted by t ascending with ties
// broken by route index (and by position within one route, for zero-length
// legs). Empty routes contribute no tuples.
std::vector<VisitTuple> arrival_times(const Recommendation& rec,
                                      const TravelTimeMatrix& travel);

}  // namespace cmsr
