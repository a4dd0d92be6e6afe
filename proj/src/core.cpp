#include "cmsr/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cmsr {

Instance validate_instance(Instance inst) {
  if (inst.n_points < 1) throw std::invalid_argument("instance needs at least one pick-up point");
  if (static_cast<int>(inst.rates.size()) != inst.n_points) {
    std::ostringstream msg;
    msg << "expected " << inst.n_points << " rates, got " << inst.rates.size();
    throw std::invalid_argument(msg.str());
  }
  for (int c = 1; c <= inst.n_points; ++c) {
    if (!(inst.rate(c) > 0.0)) {
      std::ostringstream msg;
      msg << "zero arrival rate at point " << c;
      throw std::invalid_argument(msg.str());
    }
  }
  if (inst.travel.n_points() != inst.n_points) {
    throw std::invalid_argument("travel matrix size does not match point count");
  }
  for (PointId a = 0; a <= inst.n_points; ++a) {
    for (PointId b = 0; b <= inst.n_points; ++b) {
      const std::int64_t t = inst.travel.at(a, b);
      if (t < 0) {
        std::ostringstream msg;
        msg << "negative travel time at (" << a << "," << b << ")";
        throw std::invalid_argument(msg.str());
      }
      if (a == b && t != 0) {
        std::ostringstream msg;
        msg << "non-zero diagonal travel time at point " << a;
        throw std::invalid_argument(msg.str());
      }
    }
  }
  if (inst.penalty < 0) throw std::invalid_argument("negative penalty");
  if (inst.route_len < 1) throw std::invalid_argument("route length must be at least 1");
  if (inst.route_len > inst.n_points) {
    throw std::invalid_argument("route length exceeds point count");
  }
  if (inst.fleet < 1) throw std::invalid_argument("fleet size must be at least 1");
  return inst;
}

void validate_route(const Route& route, int n_points) {
  for (std::size_t i = 0; i < route.points.size(); ++i) {
    const PointId c = route.points[i];
    if (c < 1 || c > n_points) {
      std::ostringstream msg;
      msg << "route references unknown point " << c;
      throw std::invalid_argument(msg.str());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (route.points[j] == c) {
        std::ostringstream msg;
        msg << "route repeats point " << c;
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

void validate_recommendation(const Recommendation& rec, int n_points) {
  for (const Route& r : rec.routes) validate_route(r, n_points);
}

std::vector<VisitTuple> arrival_times(const Recommendation& rec,
                                      const TravelTimeMatrix& travel) {
  std::vector<VisitTuple> tuples;
  for (int k = 0; k < rec.k(); ++k) {
    const Route& route = rec.routes[k];
    std::int64_t t = 0;
    PointId prev = 0;
    for (int u = 1; u <= route.size(); ++u) {
      const PointId c = route.points[u - 1];
      t += travel.at(prev, c);
      tuples.push_back(VisitTuple{k, u, c, t});
      prev = c;
    }
  }
  std::sort(tuples.begin(), tuples.end(), [](const VisitTuple& a, const VisitTuple& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.k != b.k) return a.k < b.k;
    return a.u < b.u;
  });
  return tuples;
}

}  // namespace cmsr
