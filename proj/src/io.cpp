#include "cmsr/io.hpp"

#include <fstream>

#include "cmsr/rng.hpp"
#include <sstream>
#include <stdexcept>

namespace cmsr {

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json doc;
  in >> doc;
  return doc;
}

void save_json(const nlohmann::json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json travel = nlohmann::json::array();
  for (PointId a = 0; a <= inst.n_points; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (PointId b = 0; b <= inst.n_points; ++b) row.push_back(inst.travel.at(a, b));
    travel.push_back(std::move(row));
  }
  return nlohmann::json{{"n_points", inst.n_points}, {"rates", inst.rates},
                        {"travel", std::move(travel)}, {"penalty", inst.penalty},
                        {"route_len", inst.route_len}, {"fleet", inst.fleet}};
}

Instance instance_from_json(const nlohmann::json& doc) {
  Instance inst;
  inst.n_points = doc.at("n_points").get<int>();
  inst.rates = doc.at("rates").get<std::vector<double>>();
  const auto& travel = doc.at("travel");
  if (static_cast<int>(travel.size()) != inst.n_points + 1) {
    throw std::invalid_argument("travel matrix must have n_points+1 rows");
  }
  inst.travel = TravelTimeMatrix(inst.n_points);
  for (PointId a = 0; a <= inst.n_points; ++a) {
    const auto& row = travel.at(a);
    if (static_cast<int>(row.size()) != inst.n_points + 1) {
      throw std::invalid_argument("travel matrix must have n_points+1 columns");
    }
    for (PointId b = 0; b <= inst.n_points; ++b) {
      inst.travel.set(a, b, row.at(b).get<std::int64_t>());
    }
  }
  inst.penalty = doc.at("penalty").get<std::int64_t>();
  inst.route_len = doc.at("route_len").get<int>();
  inst.fleet = doc.at("fleet").get<int>();
  return validate_instance(std::move(inst));
}

Instance load_instance(const std::string& path) { return instance_from_json(load_json(path)); }

void save_instance(const Instance& inst, const std::string& path) {
  save_json(instance_to_json(inst), path);
}

nlohmann::json recommendation_to_json(const Recommendation& rec) {
  nlohmann::json doc = nlohmann::json::array();
  for (const Route& route : rec.routes) doc.push_back(route.points);
  return doc;
}

Recommendation recommendation_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("recommendation must be an array of routes");
  Recommendation rec;
  for (const auto& route : doc) {
    rec.routes.push_back(Route{route.get<std::vector<PointId>>()});
  }
  return rec;
}

Recommendation load_recommendation(const std::string& path) {
  return recommendation_from_json(load_json(path));
}

void save_recommendation(const Recommendation& rec, const std::string& path) {
  save_json(recommendation_to_json(rec), path);
}

nlohmann::json trace_to_json(const GreedyTrace& trace) {
  nlohmann::json doc = nlohmann::json::array();
  for (const GreedyStep& step : trace) {
    doc.push_back(nlohmann::json{{"iteration", step.iteration}, {"route", step.route},
                                 {"point", step.point}, {"objective", step.objective}});
  }
  return doc;
}

void save_greedy_trace(const GreedyTrace& trace, const std::string& path) {
  save_json(trace_to_json(trace), path);
}

std::vector<PassengerEvent> load_events_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("point_id,time_s", 0) != 0) {
    throw std::runtime_error("events file must start with header point_id,time_s");
  }
  std::vector<PassengerEvent> events;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string point, time;
    if (!std::getline(row, point, ',') || !std::getline(row, time)) {
      throw std::runtime_error("malformed events row: " + line);
    }
    events.push_back(PassengerEvent{static_cast<PointId>(std::stol(point)), std::stod(time)});
  }
  return events;
}

void save_events_csv(const std::vector<PassengerEvent>& events, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "point_id,time_s\n";
  out.precision(6);
  out << std::fixed;
  for (const PassengerEvent& ev : events) out << ev.point << ',' << ev.time << '\n';
}

TraceLoad load_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) ||
      line.rfind("taxi_id,latitude,longitude,occupied,timestamp", 0) != 0) {
    throw std::runtime_error(
        "trace file must start with header taxi_id,latitude,longitude,occupied,timestamp");
  }
  TraceLoad load;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string taxi, lat, lon, occ, ts;
    if (!std::getline(row, taxi, ',') || !std::getline(row, lat, ',') ||
        !std::getline(row, lon, ',') || !std::getline(row, occ, ',') ||
        !std::getline(row, ts)) {
      ++load.skipped_rows;
      continue;
    }
    try {
      TraceRecord rec;
      rec.taxi_id = taxi;
      rec.lat = std::stod(lat);
      rec.lon = std::stod(lon);
      if (occ != "0" && occ != "1") throw std::invalid_argument("occupied must be 0 or 1");
      rec.occupied = occ == "1";
      rec.timestamp = std::stoll(ts);
      if (rec.lat < -90.0 || rec.lat > 90.0 || rec.lon < -180.0 || rec.lon > 180.0) {
        throw std::invalid_argument("coordinates out of range");
      }
      load.records.push_back(std::move(rec));
    } catch (const std::exception&) {
      ++load.skipped_rows;
    }
  }
  return load;
}

nlohmann::json sim_report_to_json(const SimReport& report) {
  nlohmann::json taxis = nlohmann::json::array();
  for (const TaxiOutcome& taxi : report.taxis) {
    taxis.push_back(nlohmann::json{{"cruise_seconds", taxi.cruise_seconds},
                                   {"picked_up", taxi.picked_up},
                                   {"pickup_point", taxi.pickup_point}});
  }
  return nlohmann::json{{"taxis", std::move(taxis)},
                        {"total_cruise_seconds", report.total_cruise_seconds},
                        {"pickups", report.pickups},
                        {"rng", kRngAlgorithm}};
}

nlohmann::json mean_reports_to_json(const std::map<std::string, MeanReport>& reports) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [method, mean] : reports) {
    doc[method] = nlohmann::json{{"mean_total_cruise_seconds", mean.mean_total_cruise_seconds},
                                 {"mean_pickups", mean.mean_pickups},
                                 {"mean_taxi_cruise", mean.mean_taxi_cruise}};
  }
  doc["rng"] = kRngAlgorithm;
  return doc;
}

nlohmann::json clusters_to_json(const std::vector<Cluster>& clusters) {
  nlohmann::json doc = nlohmann::json::array();
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    doc.push_back(nlohmann::json{{"point_id", i + 1}, {"lat", clusters[i].lat},
                                 {"lon", clusters[i].lon}, {"size", clusters[i].members.size()}});
  }
  return doc;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace cmsr
