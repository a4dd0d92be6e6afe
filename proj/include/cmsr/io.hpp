#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmsr/core.hpp"
#include "cmsr/ingest.hpp"
#include "cmsr/recommend.hpp"
#include "cmsr/simulate.hpp"

namespace cmsr {

// Instance document: {"n_points", "rates", "travel", "penalty", "route_len",
// "fleet"}; travel is (N+1)x(N+1) integer seconds.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& doc);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// Recommendation document: array of K arrays of point ids.
nlohmann::json recommendation_to_json(const Recommendation& rec);
Recommendation recommendation_from_json(const nlohmann::json& doc);
Recommendation load_recommendation(const std::string& path);
void save_recommendation(const Recommendation& rec, const std::string& path);

nlohmann::json trace_to_json(const GreedyTrace& trace);
void save_greedy_trace(const GreedyTrace& trace, const std::string& path);

// Events file: CSV with header point_id,time_s.
std::vector<PassengerEvent> load_events_csv(const std::string& path);
void save_events_csv(const std::vector<PassengerEvent>& events, const std::string& path);

// Trace file: CSV with header taxi_id,latitude,longitude,occupied,timestamp.
// Malformed rows are skipped and counted.
struct TraceLoad {
  std::vector<TraceRecord> records;
  std::size_t skipped_rows = 0;
};
TraceLoad load_trace_csv(const std::string& path);

nlohmann::json sim_report_to_json(const SimReport& report);
nlohmann::json mean_reports_to_json(const std::map<std::string, MeanReport>& reports);

// Cluster sidecar written next to an ingested instance.
nlohmann::json clusters_to_json(const std::vector<Cluster>& clusters);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace cmsr
