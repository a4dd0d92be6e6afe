#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmsr/core.hpp"

namespace cmsr {

struct TraceRecord {
  std::string taxi_id;
  double lat = 0.0;
  double lon = 0.0;
  bool occupied = false;
  std::int64_t timestamp = 0;  // unix seconds
};

// One occupancy transition false -> true within a taxi's chronologically
// sorted records.
struct PickupEvent {
  double lat = 0.0;
  double lon = 0.0;
  std::int64_t timestamp = 0;
};

// Half-open seconds-of-day window [start, end); timestamps are reduced
// modulo 86400.
struct TimeWindow {
  int start_sod = 0;
  int end_sod = 86400;

  bool contains(std::int64_t timestamp) const {
    const int sod = static_cast<int>(((timestamp % 86400) + 86400) % 86400);
    return sod >= start_sod && sod < end_sod;
  }
};

struct ClusterSpec {
  double eps_m = 200.0;
  int min_pts = 5;
  TimeWindow window;
};

struct Cluster {
  std::vector<PickupEvent> members;
  double lat = 0.0;  // centroid, arithmetic mean of members
  double lon = 0.0;
};

// Great-circle distance in meters.
double haversine_m(double lat1, double lon1, double lat2, double lon2);

// One event per false->true occupancy transition inside the window. Records
// may arrive in any order; they are sorted per taxi internally.
std::vector<PickupEvent> extract_pickups(std::vector<TraceRecord> records,
                                         const TimeWindow& window);

// DBSCAN over the haversine metric. Noise is discarded; clusters come back
// ordered by size descending, then centroid latitude ascending.
std::vector<Cluster> cluster_pickups(const std::vector<PickupEvent>& events,
                                     const ClusterSpec& spec);

// Per-cluster arrival rate from consecutive same-day inter-event intervals.
// `days` restricts training to the given unix day numbers (timestamp/86400);
// empty means all days. Clusters without at least two positive intervals
// cannot produce a rate and come back as nullopt.
std::vector<std::optional<double>> fit_rates(const std::vector<Cluster>& clusters,
                                             const std::vector<std::int64_t>& days = {});

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;
};

// Entry (a, b) = round(haversine(a, b) / speed) seconds; index 0 is the start
// location. Symmetric by construction, unlike real road networks.
TravelTimeMatrix build_travel_matrix(const std::vector<LatLon>& centroids, LatLon start,
                                     double speed_mps);

struct IngestOptions {
  ClusterSpec cluster;
  LatLon start;
  double speed_mps = 8.333;  // ~30 km/h
  int route_len = 5;
  int fleet = 4;
  int max_points = 0;  // keep only the largest clusters; 0 = keep all
};

struct IngestResult {
  Instance instance;
  std::vector<Cluster> clusters;     // aligned with instance point ids 1..N
  std::vector<std::string> warnings; // dropped clusters etc.
};

// Full pipeline: extract -> cluster -> fit rates -> travel matrix. The
// penalty defaults to the mean off-diagonal travel time.
IngestResult build_instance_from_traces(std::vector<TraceRecord> records,
                                        const IngestOptions& opts);

}  // namespace cmsr
