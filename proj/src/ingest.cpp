#include "cmsr/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cmsr {

namespace {
constexpr double kEarthRadiusM = 6371000.0;
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
}  // namespace

double haversine_m(double lat1, double lon1, double lat2, double lon2) {
  const double phi1 = lat1 * kDegToRad;
  const double phi2 = lat2 * kDegToRad;
  const double dphi = (lat2 - lat1) * kDegToRad;
  const double dlam = (lon2 - lon1) * kDegToRad;
  const double a = std::sin(dphi / 2) * std::sin(dphi / 2) +
                   std::cos(phi1) * std::cos(phi2) * std::sin(dlam / 2) * std::sin(dlam / 2);
  return 2.0 * kEarthRadiusM * std::asin(std::sqrt(std::min(1.0, a)));
}

std::vector<PickupEvent> extract_pickups(std::vector<TraceRecord> records,
                                         const TimeWindow& window) {
  std::stable_sort(records.begin(), records.end(),
                   [](const TraceRecord& a, const TraceRecord& b) {
                     if (a.taxi_id != b.taxi_id) return a.taxi_id < b.taxi_id;
                     return a.timestamp < b.timestamp;
                   });
  std::vector<PickupEvent> events;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const TraceRecord& rec = records[i];
    const TraceRecord& prev = records[i - 1];
    // only an observed vacant -> occupied edge of the same taxi counts
    if (rec.occupied && !prev.occupied && prev.taxi_id == rec.taxi_id &&
        window.contains(rec.timestamp)) {
      events.push_back(PickupEvent{rec.lat, rec.lon, rec.timestamp});
    }
  }
  return events;
}

std::vector<Cluster> cluster_pickups(const std::vector<PickupEvent>& events,
                                     const ClusterSpec& spec) {
  if (events.empty()) throw std::invalid_argument("no pickup events to cluster");
  if (!(spec.eps_m > 0.0)) throw std::invalid_argument("eps must be positive");
  if (spec.min_pts < 1) throw std::invalid_argument("min_pts must be at least 1");

  const std::size_t n = events.size();
  auto neighbors = [&](std::size_t i) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n; ++j) {
      if (haversine_m(events[i].lat, events[i].lon, events[j].lat, events[j].lon) <=
          spec.eps_m) {
        out.push_back(j);  // includes i itself
      }
    }
    return out;
  };

  constexpr int kUnvisited = -2;
  constexpr int kNoise = -1;
  std::vector<int> label(n, kUnvisited);
  int next_cluster = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] != kUnvisited) continue;
    std::vector<std::size_t> seeds = neighbors(i);
    if (static_cast<int>(seeds.size()) < spec.min_pts) {
      label[i] = kNoise;
      continue;
    }
    const int cluster = next_cluster++;
    label[i] = cluster;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const std::size_t j = seeds[s];
      if (label[j] == kNoise) label[j] = cluster;  // border point
      if (label[j] != kUnvisited) continue;
      label[j] = cluster;
      std::vector<std::size_t> more = neighbors(j);
      if (static_cast<int>(more.size()) >= spec.min_pts) {
        seeds.insert(seeds.end(), more.begin(), more.end());
      }
    }
  }

  std::vector<Cluster> clusters(next_cluster);
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] >= 0) clusters[label[i]].members.push_back(events[i]);
  }
  for (Cluster& c : clusters) {
    double lat = 0.0, lon = 0.0;
    for (const PickupEvent& e : c.members) {
      lat += e.lat;
      lon += e.lon;
    }
    c.lat = lat / static_cast<double>(c.members.size());
    c.lon = lon / static_cast<double>(c.members.size());
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.lat < b.lat;
  });
  return clusters;
}

std::vector<std::optional<double>> fit_rates(const std::vector<Cluster>& clusters,
                                             const std::vector<std::int64_t>& days) {
  std::vector<std::optional<double>> rates;
  rates.reserve(clusters.size());
  for (const Cluster& cluster : clusters) {
    // bucket event times per day; cross-day gaps are not real intervals
    std::map<std::int64_t, std::vector<std::int64_t>> per_day;
    for (const PickupEvent& e : cluster.members) {
      const std::int64_t day = e.timestamp / 86400;
      if (!days.empty() && std::find(days.begin(), days.end(), day) == days.end()) continue;
      per_day[day].push_back(e.timestamp);
    }
    double sum = 0.0;
    std::size_t count = 0;
    for (auto& [day, times] : per_day) {
      std::sort(times.begin(), times.end());
      for (std::size_t i = 1; i < times.size(); ++i) {
        const std::int64_t gap = times[i] - times[i - 1];
        if (gap <= 0) continue;  // duplicate timestamps collapse
        sum += static_cast<double>(gap);
        ++count;
      }
    }
    if (count >= 2) {
      rates.push_back(static_cast<double>(count - 1) / sum);
    } else {
      rates.push_back(std::nullopt);
    }
  }
  return rates;
}

TravelTimeMatrix build_travel_matrix(const std::vector<LatLon>& centroids, LatLon start,
                                     double speed_mps) {
  if (!(speed_mps > 0.0)) throw std::invalid_argument("speed must be positive");
  const int n = static_cast<int>(centroids.size());
  std::vector<LatLon> all;
  all.reserve(n + 1);
  all.push_back(start);
  all.insert(all.end(), centroids.begin(), centroids.end());
  TravelTimeMatrix matrix(n);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      if (a == b) continue;
      const double meters = haversine_m(all[a].lat, all[a].lon, all[b].lat, all[b].lon);
      matrix.set(a, b, std::llround(meters / speed_mps));
    }
  }
  return matrix;
}

IngestResult build_instance_from_traces(std::vector<TraceRecord> records,
                                        const IngestOptions& opts) {
  IngestResult result;
  const std::vector<PickupEvent> events =
      extract_pickups(std::move(records), opts.cluster.window);
  if (events.empty()) throw std::runtime_error("no pickup events inside the window");
  std::vector<Cluster> clusters = cluster_pickups(events, opts.cluster);
  if (clusters.empty()) throw std::runtime_error("clustering produced no pick-up points");

  const std::vector<std::optional<double>> fitted = fit_rates(clusters);
  std::vector<Cluster> kept;
  std::vector<double> rates;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (!fitted[i].has_value()) {
      std::ostringstream msg;
      msg << "dropped cluster " << i << " (" << clusters[i].members.size()
          << " events): too few intervals for a rate";
      result.warnings.push_back(msg.str());
      continue;
    }
    kept.push_back(std::move(clusters[i]));
    rates.push_back(*fitted[i]);
  }
  if (kept.empty()) throw std::runtime_error("no cluster had enough events to fit a rate");
  if (opts.max_points > 0 && static_cast<int>(kept.size()) > opts.max_points) {
    kept.resize(opts.max_points);
    rates.resize(opts.max_points);
  }

  std::vector<LatLon> centroids;
  centroids.reserve(kept.size());
  for (const Cluster& c : kept) centroids.push_back(LatLon{c.lat, c.lon});

  Instance inst;
  inst.n_points = static_cast<int>(kept.size());
  inst.rates = std::move(rates);
  inst.travel = build_travel_matrix(centroids, opts.start, opts.speed_mps);
  // penalty: mean off-diagonal travel time
  std::int64_t sum = 0;
  std::int64_t cells = 0;
  for (int a = 0; a <= inst.n_points; ++a) {
    for (int b = 0; b <= inst.n_points; ++b) {
      if (a == b) continue;
      sum += inst.travel.at(a, b);
      ++cells;
    }
  }
  inst.penalty = cells > 0 ? (sum + cells / 2) / cells : 0;
  inst.route_len = std::min(opts.route_len, inst.n_points);
  inst.fleet = opts.fleet;
  result.instance = validate_instance(std::move(inst));
  result.clusters = std::move(kept);
  return result;
}

}  // namespace cmsr
