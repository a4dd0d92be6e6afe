#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cmsr/core.hpp"

namespace cmsr {

struct RouteScore {
  Route route;
  double ptt = 0.0;  // expected cruising seconds
};

// Expected cruising time of a single uncontested taxi along the route: the
// dot product of the cumulative-time vector (with the penalty appended to the
// last component) and the stop-position probability vector.
double single_ptt(const Route& route, const Instance& inst);

// Streams all ordered sequences of `length` distinct points from 1..n_points
// in lexicographic order, without materializing the space.
class RouteEnumerator {
 public:
  RouteEnumerator(int n_points, int length);

  // next route, or nullopt when exhausted
  std::optional<Route> next();

 private:
  bool advance();

  int n_;
  int len_;
  std::vector<PointId> current_;
  std::vector<bool> used_;
  bool done_ = false;
  bool first_ = true;
};

std::uint64_t route_count(int n_points, int length);

// The k routes with smallest PTT, ascending, ties broken lexicographically by
// point sequence. threads > 1 partitions the enumeration by first point.
std::vector<RouteScore> best_routes(const Instance& inst, int k, int threads = 1);

// Top-K baseline: the instance's K best independent routes as an ordered
// recommendation.
Recommendation top_k_routes(const Instance& inst, int threads = 1);

// K times the uncontested minimum PTT. Ignores competition entirely, so it
// bounds every recommendation's F from below.
double lower_bound(const Instance& inst, int threads = 1);

}  // namespace cmsr
