#include "cmsr/simulate.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmsr/rng.hpp"

namespace cmsr {

std::vector<PassengerEvent> gen_poisson_events(const Instance& inst, double horizon,
                                               std::uint64_t seed) {
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  std::vector<PassengerEvent> events;
  for (PointId c = 1; c <= inst.n_points; ++c) {
    SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(c)));
    double t = rng.next_exponential(inst.rate(c));
    while (t <= horizon) {
      events.push_back(PassengerEvent{c, t});
      t += rng.next_exponential(inst.rate(c));
    }
  }
  std::sort(events.begin(), events.end(), [](const PassengerEvent& a, const PassengerEvent& b) {
    if (a.time != b.time) return a.time < b.time;
    return a.point < b.point;
  });
  return events;
}

SimReport simulate(const Recommendation& rec, const Instance& inst,
                   const std::vector<PassengerEvent>& events) {
  validate_recommendation(rec, inst.n_points);
  for (std::size_t i = 0; i < events.size(); ++i) {
    const PointId c = events[i].point;
    if (c < 1 || c > inst.n_points) throw std::invalid_argument("event at unknown point");
    if (i > 0 && events[i].time < events[i - 1].time) {
      throw std::invalid_argument("events must be sorted by time");
    }
  }

  // per-point event times, already chronological
  std::vector<std::vector<double>> by_point(static_cast<std::size_t>(inst.n_points) + 1);
  for (const PassengerEvent& ev : events) by_point[ev.point].push_back(ev.time);
  // next[c]: first event at c that no still-cruising visit has cleared yet.
  // The pickup interval is (last_visit, t] with last_visit starting at 0, so
  // events at exactly time 0 are never reachable.
  std::vector<std::size_t> next(static_cast<std::size_t>(inst.n_points) + 1, 0);
  for (PointId c = 1; c <= inst.n_points; ++c) {
    while (next[c] < by_point[c].size() && by_point[c][next[c]] <= 0.0) ++next[c];
  }

  SimReport report;
  report.taxis.resize(rec.k());
  std::vector<bool> cruising(rec.k(), true);

  const std::vector<VisitTuple> tuples = arrival_times(rec, inst.travel);
  for (const VisitTuple& tup : tuples) {
    if (!cruising[tup.k]) continue;  // picked up earlier, no longer visits
    const double t = static_cast<double>(tup.t);
    const std::vector<double>& times = by_point[tup.c];
    std::size_t& cursor = next[tup.c];
    bool waiting = cursor < times.size() && times[cursor] <= t;
    if (waiting) {
      cruising[tup.k] = false;
      report.taxis[tup.k] = TaxiOutcome{t, true, tup.c};
    }
    // the visit clears everything that arrived up to t, pickup or not
    while (cursor < times.size() && times[cursor] <= t) ++cursor;
    if (!waiting && tup.u == rec.routes[tup.k].size()) {
      // route exhausted without a pickup
      report.taxis[tup.k] =
          TaxiOutcome{t + static_cast<double>(inst.penalty), false, 0};
    }
  }
  // empty routes never leave the start: penalty only
  for (int k = 0; k < rec.k(); ++k) {
    if (rec.routes[k].empty()) {
      report.taxis[k] = TaxiOutcome{static_cast<double>(inst.penalty), false, 0};
    }
  }

  for (const TaxiOutcome& taxi : report.taxis) {
    report.total_cruise_seconds += taxi.cruise_seconds;
    report.pickups += taxi.picked_up ? 1 : 0;
  }
  return report;
}

std::map<std::string, MeanReport> batch_simulate(
    const std::map<std::string, Recommendation>& rec_by_method, const Instance& inst,
    int n_days, double horizon, std::uint64_t seed) {
  if (n_days < 1) throw std::invalid_argument("n_days must be at least 1");
  std::map<std::string, MeanReport> means;
  for (const auto& [method, rec] : rec_by_method) {
    means[method].mean_taxi_cruise.assign(rec.k(), 0.0);
  }
  for (int day = 0; day < n_days; ++day) {
    const std::vector<PassengerEvent> events =
        gen_poisson_events(inst, horizon, seed + static_cast<std::uint64_t>(day));
    for (const auto& [method, rec] : rec_by_method) {
      const SimReport report = simulate(rec, inst, events);
      MeanReport& mean = means[method];
      mean.mean_total_cruise_seconds += report.total_cruise_seconds;
      mean.mean_pickups += report.pickups;
      for (int k = 0; k < rec.k(); ++k) {
        mean.mean_taxi_cruise[k] += report.taxis[k].cruise_seconds;
      }
    }
  }
  for (auto& [method, mean] : means) {
    mean.mean_total_cruise_seconds /= n_days;
    mean.mean_pickups /= n_days;
    for (double& v : mean.mean_taxi_cruise) v /= n_days;
  }
  return means;
}

}  // namespace cmsr
