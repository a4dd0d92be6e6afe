// Python bindings for the core operations: instance construction, route
// evaluation, recommendation builders, and the trace-driven simulator.
// Routes cross the boundary as plain lists of 1-based point ids.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmsr/collective.hpp"
#include "cmsr/core.hpp"
#include "cmsr/gen.hpp"
#include "cmsr/io.hpp"
#include "cmsr/probability.hpp"
#include "cmsr/recommend.hpp"
#include "cmsr/simulate.hpp"
#include "cmsr/single_route.hpp"

namespace py = pybind11;
using namespace cmsr;

namespace {

using PyRoutes = std::vector<std::vector<int>>;
using PyEvents = std::vector<std::pair<int, double>>;

Recommendation to_rec(const PyRoutes& routes) {
  Recommendation rec;
  for (const auto& pts : routes) {
    Route route;
    for (int c : pts) route.points.push_back(static_cast<PointId>(c));
    rec.routes.push_back(std::move(route));
  }
  return rec;
}

PyRoutes from_rec(const Recommendation& rec) {
  PyRoutes routes;
  for (const Route& r : rec.routes) {
    routes.emplace_back(r.points.begin(), r.points.end());
  }
  return routes;
}

Route to_route(const std::vector<int>& pts) {
  Route route;
  for (int c : pts) route.points.push_back(static_cast<PointId>(c));
  return route;
}

std::vector<PassengerEvent> to_events(const PyEvents& events) {
  std::vector<PassengerEvent> out;
  out.reserve(events.size());
  for (const auto& [point, time] : events) {
    out.push_back({static_cast<PointId>(point), time});
  }
  return out;
}

Engine parse_engine(const std::string& name) {
  if (name == "sa") return Engine::SA;
  if (name == "se") return Engine::SE;
  throw std::invalid_argument("engine must be 'sa' or 'se'");
}

Instance make_instance(const std::vector<double>& rates,
                       const std::vector<std::vector<std::int64_t>>& travel,
                       std::int64_t penalty, int route_len, int fleet) {
  Instance inst;
  inst.n_points = static_cast<int>(rates.size());
  inst.rates = rates;
  inst.travel = TravelTimeMatrix(inst.n_points);
  if (static_cast<int>(travel.size()) != inst.n_points + 1) {
    throw std::invalid_argument("travel must be an (N+1) x (N+1) matrix");
  }
  for (int a = 0; a <= inst.n_points; ++a) {
    if (static_cast<int>(travel[a].size()) != inst.n_points + 1) {
      throw std::invalid_argument("travel must be an (N+1) x (N+1) matrix");
    }
    for (int b = 0; b <= inst.n_points; ++b) inst.travel.set(a, b, travel[a][b]);
  }
  inst.penalty = penalty;
  inst.route_len = route_len;
  inst.fleet = fleet;
  return validate_instance(std::move(inst));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Collective route recommendation: evaluation, construction, simulation";

  py::class_<Instance>(m, "Instance")
      .def_readonly("n_points", &Instance::n_points)
      .def_readonly("rates", &Instance::rates)
      .def_readonly("penalty", &Instance::penalty)
      .def_readonly("route_len", &Instance::route_len)
      .def_readonly("fleet", &Instance::fleet)
      .def("rate", &Instance::rate, py::arg("point"))
      .def(
          "travel",
          [](const Instance& inst, int a, int b) { return inst.travel.at(a, b); },
          py::arg("a"), py::arg("b"))
      .def("__repr__", [](const Instance& inst) {
        return "Instance(n_points=" + std::to_string(inst.n_points) +
               ", fleet=" + std::to_string(inst.fleet) +
               ", route_len=" + std::to_string(inst.route_len) + ")";
      });

  py::class_<GreedyStep>(m, "GreedyStep")
      .def_readonly("iteration", &GreedyStep::iteration)
      .def_readonly("route", &GreedyStep::route)
      .def_readonly("point", &GreedyStep::point)
      .def_readonly("objective", &GreedyStep::objective)
      .def("__repr__", [](const GreedyStep& s) {
        return "GreedyStep(iteration=" + std::to_string(s.iteration) +
               ", route=" + std::to_string(s.route) + ", point=" + std::to_string(s.point) +
               ", objective=" + std::to_string(s.objective) + ")";
      });

  py::class_<TaxiOutcome>(m, "TaxiOutcome")
      .def_readonly("cruise_seconds", &TaxiOutcome::cruise_seconds)
      .def_readonly("picked_up", &TaxiOutcome::picked_up)
      .def_readonly("pickup_point", &TaxiOutcome::pickup_point);

  py::class_<SimReport>(m, "SimReport")
      .def_readonly("taxis", &SimReport::taxis)
      .def_readonly("total_cruise_seconds", &SimReport::total_cruise_seconds)
      .def_readonly("pickups", &SimReport::pickups);

  py::class_<MeanReport>(m, "MeanReport")
      .def_readonly("mean_total_cruise_seconds", &MeanReport::mean_total_cruise_seconds)
      .def_readonly("mean_pickups", &MeanReport::mean_pickups)
      .def_readonly("mean_taxi_cruise", &MeanReport::mean_taxi_cruise);

  m.def("make_instance", &make_instance, py::arg("rates"), py::arg("travel"),
        py::arg("penalty"), py::arg("route_len"), py::arg("fleet"),
        "Build and validate an instance from raw parts");

  m.def(
      "synth_instance",
      [](int n_points, int fleet, int route_len, std::uint64_t seed, double rate_lo,
         double rate_hi, std::int64_t time_lo, std::int64_t time_hi) {
        SynthSpec spec;
        spec.n_points = n_points;
        spec.fleet = fleet;
        spec.route_len = route_len;
        spec.seed = seed;
        spec.rate_lo = rate_lo;
        spec.rate_hi = rate_hi;
        spec.time_lo = time_lo;
        spec.time_hi = time_hi;
        return synth_instance(spec);
      },
      py::arg("n_points") = 10, py::arg("fleet") = 2, py::arg("route_len") = 3,
      py::arg("seed") = 1, py::arg("rate_lo") = 0.001, py::arg("rate_hi") = 0.02,
      py::arg("time_lo") = 60, py::arg("time_hi") = 900,
      "Seeded random instance");

  m.def(
      "load_instance", [](const std::string& path) { return load_instance(path); },
      py::arg("path"));
  m.def(
      "save_instance",
      [](const Instance& inst, const std::string& path) { save_instance(inst, path); },
      py::arg("instance"), py::arg("path"));

  m.def(
      "pickup_prob",
      [](double rate, double delta) { return pickup_prob(rate, delta); },
      py::arg("rate"), py::arg("delta"),
      "P(at least one arrival within delta seconds)");
  m.def("estimate_rate", &estimate_rate, py::arg("intervals"),
        "Arrival rate from consecutive inter-event intervals");

  m.def(
      "single_ptt",
      [](const std::vector<int>& route, const Instance& inst) {
        return single_ptt(to_route(route), inst);
      },
      py::arg("route"), py::arg("instance"),
      "Closed-form expected cruising time of one route in isolation");

  m.def(
      "evaluate",
      [](const PyRoutes& routes, const Instance& inst, const std::string& engine) {
        return evaluate(to_rec(routes), inst, parse_engine(engine));
      },
      py::arg("routes"), py::arg("instance"), py::arg("engine") = "se",
      "Expected total cruising time of a route set");

  m.def(
      "greedy",
      [](const Instance& inst, const std::string& engine, int threads) {
        GreedyOptions opts;
        opts.engine = parse_engine(engine);
        opts.threads = threads;
        auto [rec, trace] = greedy_recommend(inst, opts);
        return std::make_pair(from_rec(rec), trace);
      },
      py::arg("instance"), py::arg("engine") = "se", py::arg("threads") = 1,
      "Greedy construction; returns (routes, trace)");

  m.def(
      "top_k",
      [](const Instance& inst, int threads) { return from_rec(top_k_routes(inst, threads)); },
      py::arg("instance"), py::arg("threads") = 1,
      "K best independent routes");

  m.def(
      "random_routes",
      [](const Instance& inst, std::uint64_t seed) {
        return from_rec(random_recommend(inst, seed));
      },
      py::arg("instance"), py::arg("seed"), "Seeded uniform random route set");

  m.def(
      "lcp_style",
      [](const Instance& inst, int pool, int threads) {
        return from_rec(lcp_style_recommend(inst, pool, threads));
      },
      py::arg("instance"), py::arg("pool") = 5, py::arg("threads") = 1,
      "Round-robin assignment of the pool best independent routes");

  m.def(
      "lower_bound",
      [](const Instance& inst, int threads) { return lower_bound(inst, threads); },
      py::arg("instance"), py::arg("threads") = 1,
      "Unreachable relaxation: fleet times the best single-route time");

  m.def(
      "gen_events",
      [](const Instance& inst, double horizon, std::uint64_t seed) {
        PyEvents out;
        for (const PassengerEvent& e : gen_poisson_events(inst, horizon, seed)) {
          out.emplace_back(e.point, e.time);
        }
        return out;
      },
      py::arg("instance"), py::arg("horizon"), py::arg("seed"),
      "Poisson passenger arrivals as (point, time) pairs");

  m.def(
      "simulate",
      [](const PyRoutes& routes, const Instance& inst, const PyEvents& events) {
        return simulate(to_rec(routes), inst, to_events(events));
      },
      py::arg("routes"), py::arg("instance"), py::arg("events"),
      "Replay one event stream against a route set");

  m.def(
      "batch_simulate",
      [](const std::map<std::string, PyRoutes>& recs, const Instance& inst, int n_days,
         double horizon, std::uint64_t seed) {
        std::map<std::string, Recommendation> converted;
        for (const auto& [name, routes] : recs) converted[name] = to_rec(routes);
        return batch_simulate(converted, inst, n_days, horizon, seed);
      },
      py::arg("recs"), py::arg("instance"), py::arg("days"), py::arg("horizon"),
      py::arg("seed"), "Mean outcomes over shared day streams, per method");
}
