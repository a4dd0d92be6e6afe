// cmsr: build, score, and replay collective taxi route recommendations.
//
// Subcommands: gen, ingest, recommend, evaluate, simulate, bench. Every
// command is deterministic given its flags; all randomness is seed-derived.
// F values print with 6 fixed decimals so output can be golden-file tested.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmsr/collective.hpp"
#include "cmsr/core.hpp"
#include "cmsr/gen.hpp"
#include "cmsr/ingest.hpp"
#include "cmsr/io.hpp"
#include "cmsr/recommend.hpp"
#include "cmsr/rng.hpp"
#include "cmsr/simulate.hpp"
#include "cmsr/single_route.hpp"

namespace {

using namespace cmsr;

constexpr double kDefaultMaxStates = 1e7;

std::string fixed6(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << v;
  return out.str();
}

Engine parse_engine(const std::string& name) {
  return name == "sa" ? Engine::SA : Engine::SE;
}

// outcome-table size of a full greedy run: (L+1)^K
double final_state_count(const Instance& inst) {
  return std::pow(static_cast<double>(inst.route_len) + 1.0, inst.fleet);
}

double state_count(const Recommendation& rec) {
  double states = 1.0;
  for (const Route& r : rec.routes) states *= static_cast<double>(r.size()) + 1.0;
  return states;
}

void require_states(double states, double cap) {
  if (states > cap) {
    std::ostringstream msg;
    msg << "outcome space of " << std::setprecision(0) << std::fixed << states
        << " states exceeds the cap of " << cap << " (raise --max-states to override)";
    throw std::runtime_error(msg.str());
  }
}

// sibling path: base.json -> base<suffix>.json
std::string derive_path(const std::string& base, const std::string& suffix) {
  const std::string ext = ".json";
  if (base.size() > ext.size() && base.compare(base.size() - ext.size(), ext.size(), ext) == 0) {
    return base.substr(0, base.size() - ext.size()) + suffix + ext;
  }
  return base + suffix + ext;
}

struct GenArgs {
  std::string out;
  SynthSpec spec;
};

int run_gen(const GenArgs& args) {
  const Instance inst = synth_instance(args.spec);
  save_instance(inst, args.out);
  std::cout << "instance " << args.out << "\n"
            << "points " << inst.n_points << "\n"
            << "penalty " << inst.penalty << "\n";
  return 0;
}

struct IngestArgs {
  std::string trace;
  std::string out;
  std::string clusters_out;
  IngestOptions opts;
};

int run_ingest(const IngestArgs& args) {
  const TraceLoad load = load_trace_csv(args.trace);
  const IngestResult result = build_instance_from_traces(load.records, args.opts);
  for (const std::string& warning : result.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  save_instance(result.instance, args.out);
  const std::string sidecar =
      args.clusters_out.empty() ? derive_path(args.out, ".clusters") : args.clusters_out;
  write_text_file(sidecar, clusters_to_json(result.clusters).dump(2) + "\n");

  std::cout << "records " << load.records.size() << "\n"
            << "skipped_rows " << load.skipped_rows << "\n"
            << "points " << result.instance.n_points << "\n"
            << "penalty " << result.instance.penalty << "\n"
            << "instance " << args.out << "\n"
            << "clusters " << sidecar << "\n";
  return 0;
}

struct RecommendArgs {
  std::string instance;
  std::string method;
  std::string out;
  std::string trace_out;
  std::string engine = "se";
  std::optional<std::uint64_t> seed;
  int pool = 5;
  int threads = 1;
  double max_states = kDefaultMaxStates;
};

int run_recommend(const RecommendArgs& args) {
  if (args.method == "lb") {
    if (!args.out.empty()) {
      std::cerr << "error: --out is meaningless with method lb (no routes are produced)\n";
      return 2;
    }
    const Instance inst = load_instance(args.instance);
    std::cout << "LB " << fixed6(lower_bound(inst, args.threads)) << "\n";
    return 0;
  }
  if (args.out.empty()) {
    std::cerr << "error: --out is required for method " << args.method << "\n";
    return 2;
  }
  if (args.method == "ran" && !args.seed.has_value()) {
    std::cerr << "error: method ran requires --seed (runs must be reproducible)\n";
    return 2;
  }

  const Instance inst = load_instance(args.instance);
  Recommendation rec;
  GreedyTrace trace;
  if (args.method == "gr") {
    require_states(final_state_count(inst), args.max_states);
    GreedyOptions opts;
    opts.engine = parse_engine(args.engine);
    opts.threads = args.threads;
    std::tie(rec, trace) = greedy_recommend(inst, opts);
  } else if (args.method == "topk") {
    rec = top_k_routes(inst, args.threads);
  } else if (args.method == "ran") {
    rec = random_recommend(inst, *args.seed);
  } else {
    rec = lcp_style_recommend(inst, args.pool, args.threads);
  }

  save_recommendation(rec, args.out);
  if (args.method == "gr") {
    const std::string trace_path =
        args.trace_out.empty() ? derive_path(args.out, ".trace") : args.trace_out;
    save_greedy_trace(trace, trace_path);
  }
  require_states(state_count(rec), args.max_states);
  std::cout << "F " << fixed6(evaluate_se(rec, inst)) << "\n";
  return 0;
}

struct EvaluateArgs {
  std::string instance;
  std::string recommendation;
  std::string engine = "se";
  double max_states = kDefaultMaxStates;
};

int run_evaluate(const EvaluateArgs& args) {
  const Instance inst = load_instance(args.instance);
  const Recommendation rec = load_recommendation(args.recommendation);
  if (rec.k() != inst.fleet) {
    std::cerr << "warning: recommendation has " << rec.k() << " routes but the instance fleet is "
              << inst.fleet << "; evaluating " << rec.k() << "\n";
  }
  require_states(state_count(rec), args.max_states);

  if (args.engine == "both") {
    const double f_sa = evaluate_sa(rec, inst);
    const double f_se = evaluate_se(rec, inst);
    const double rel = std::fabs(f_se - f_sa) / std::max(std::fabs(f_sa), 1e-300);
    std::cout << "F_sa " << fixed6(f_sa) << "\n"
              << "F_se " << fixed6(f_se) << "\n"
              << "rel_diff " << std::scientific << std::setprecision(3) << rel << "\n";
    return 0;
  }
  std::cout << "F " << fixed6(evaluate(rec, inst, parse_engine(args.engine))) << "\n";
  return 0;
}

struct SimulateArgs {
  std::string instance;
  std::vector<std::string> recs;  // path or name=path
  std::string events;
  std::string out;
  std::string format = "csv";
  int days = 1;
  double horizon = 86400.0;
  std::uint64_t seed = 1;
};

int run_simulate(const SimulateArgs& args) {
  const Instance inst = load_instance(args.instance);
  std::map<std::string, Recommendation> methods;
  for (const std::string& spec : args.recs) {
    std::string name, path;
    const std::size_t eq = spec.find('=');
    if (eq != std::string::npos && eq > 0) {
      name = spec.substr(0, eq);
      path = spec.substr(eq + 1);
    } else {
      path = spec;
      name = std::filesystem::path(spec).stem().string();
    }
    if (!methods.emplace(name, load_recommendation(path)).second) {
      throw std::runtime_error("duplicate method name: " + name +
                               " (disambiguate with name=path)");
    }
  }

  std::map<std::string, MeanReport> means;
  std::map<std::string, SimReport> single;  // populated when exactly one day runs
  if (!args.events.empty()) {
    const std::vector<PassengerEvent> events = load_events_csv(args.events);
    for (const auto& [name, rec] : methods) {
      const SimReport report = simulate(rec, inst, events);
      single[name] = report;
      MeanReport mean;
      mean.mean_total_cruise_seconds = report.total_cruise_seconds;
      mean.mean_pickups = report.pickups;
      for (const TaxiOutcome& taxi : report.taxis) {
        mean.mean_taxi_cruise.push_back(taxi.cruise_seconds);
      }
      means[name] = std::move(mean);
    }
  } else {
    means = batch_simulate(methods, inst, args.days, args.horizon, args.seed);
    if (args.days == 1) {
      const std::vector<PassengerEvent> events = gen_poisson_events(inst, args.horizon, args.seed);
      for (const auto& [name, rec] : methods) single[name] = simulate(rec, inst, events);
    }
  }

  // one method over one stream: keep the per-taxi detail
  nlohmann::json doc;
  if (single.size() == 1 && methods.size() == 1) {
    doc = sim_report_to_json(single.begin()->second);
  } else {
    doc = mean_reports_to_json(means);
  }
  if (!args.out.empty()) write_text_file(args.out, doc.dump(2) + "\n");

  if (args.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "method,mean_total_cruise_seconds,mean_pickups\n";
    for (const auto& [name, mean] : means) {
      std::cout << name << ',' << fixed6(mean.mean_total_cruise_seconds) << ','
                << fixed6(mean.mean_pickups) << "\n";
    }
  }
  return 0;
}

struct BenchArgs {
  std::vector<std::string> cells;
  std::uint64_t seed = 1;
  int threads = 1;
  double max_states = kDefaultMaxStates;
  std::string format = "csv";
};

struct BenchRow {
  int n = 0;
  int k = 0;
  int l = 0;
  const char* engine = "SE";
  double wall_seconds = 0.0;
  double f = 0.0;
};

int run_bench(const BenchArgs& args) {
  struct Cell {
    int n, k, l;
  };
  std::vector<Cell> cells;
  for (const std::string& text : args.cells) {
    Cell cell{};
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> cell.n >> c1 >> cell.k >> c2 >> cell.l) || c1 != ',' || c2 != ',') {
      throw std::runtime_error("cell must be N,K,L: " + text);
    }
    cells.push_back(cell);
  }

  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& cell = cells[i];
    const double states = std::pow(static_cast<double>(cell.l) + 1.0, cell.k);
    if (states > args.max_states) {
      std::cerr << "note: skipped cell " << cell.n << ',' << cell.k << ',' << cell.l << ": "
                << std::setprecision(0) << std::fixed << states << " states exceed the cap of "
                << args.max_states << "\n";
      continue;
    }
    SynthSpec spec;
    spec.n_points = cell.n;
    spec.fleet = cell.k;
    spec.route_len = cell.l;
    spec.seed = substream_seed(args.seed, i);
    const Instance inst = synth_instance(spec);

    for (const Engine engine : {Engine::SE, Engine::SA}) {
      GreedyOptions opts;
      opts.engine = engine;
      opts.threads = args.threads;
      const auto start = std::chrono::steady_clock::now();
      const auto [rec, trace] = greedy_recommend(inst, opts);
      const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
      rows.push_back(BenchRow{cell.n, cell.k, cell.l, engine == Engine::SE ? "SE" : "SA",
                              wall.count(), trace.back().objective});
    }
  }

  if (args.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const BenchRow& row : rows) {
      doc.push_back(nlohmann::json{{"N", row.n}, {"K", row.k}, {"L", row.l},
                                   {"engine", row.engine}, {"wall_seconds", row.wall_seconds},
                                   {"F", row.f}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "N,K,L,engine,wall_seconds,F\n";
    for (const BenchRow& row : rows) {
      std::cout << row.n << ',' << row.k << ',' << row.l << ',' << row.engine << ','
                << fixed6(row.wall_seconds) << ',' << fixed6(row.f) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collective mobile sequential recommendation toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "write a synthetic instance");
  gen_cmd->add_option("--out", gen.out, "instance JSON path")->required();
  gen_cmd->add_option("--n", gen.spec.n_points, "number of pick-up points");
  gen_cmd->add_option("--fleet", gen.spec.fleet, "number of taxis K");
  gen_cmd->add_option("--route-len", gen.spec.route_len, "route length L");
  gen_cmd->add_option("--seed", gen.spec.seed, "generator seed");
  gen_cmd->add_option("--rate-lo", gen.spec.rate_lo, "minimum arrival rate (events/s)");
  gen_cmd->add_option("--rate-hi", gen.spec.rate_hi, "maximum arrival rate (events/s)");
  gen_cmd->add_option("--time-lo", gen.spec.time_lo, "minimum travel time (s)");
  gen_cmd->add_option("--time-hi", gen.spec.time_hi, "maximum travel time (s)");

  IngestArgs ingest;
  CLI::App* ingest_cmd =
      app.add_subcommand("ingest", "build an instance from a GPS occupancy trace");
  ingest_cmd->add_option("--trace", ingest.trace, "trace CSV path")->required();
  ingest_cmd->add_option("--out", ingest.out, "instance JSON path")->required();
  ingest_cmd->add_option("--clusters-out", ingest.clusters_out,
                         "cluster sidecar path (default: <out>.clusters.json)");
  ingest_cmd->add_option("--start-lat", ingest.opts.start.lat, "fleet start latitude")
      ->required();
  ingest_cmd->add_option("--start-lon", ingest.opts.start.lon, "fleet start longitude")
      ->required();
  ingest_cmd->add_option("--eps", ingest.opts.cluster.eps_m, "DBSCAN radius in meters");
  ingest_cmd->add_option("--min-pts", ingest.opts.cluster.min_pts, "DBSCAN density threshold");
  ingest_cmd->add_option("--window-start", ingest.opts.cluster.window.start_sod,
                         "window start, seconds of day");
  ingest_cmd->add_option("--window-end", ingest.opts.cluster.window.end_sod,
                         "window end, seconds of day (exclusive)");
  ingest_cmd->add_option("--speed-mps", ingest.opts.speed_mps, "assumed cruising speed");
  ingest_cmd->add_option("--route-len", ingest.opts.route_len, "route length L");
  ingest_cmd->add_option("--fleet", ingest.opts.fleet, "number of taxis K");
  ingest_cmd->add_option("--max-points", ingest.opts.max_points,
                         "keep only the largest clusters (0 = all)");

  RecommendArgs rec;
  CLI::App* rec_cmd = app.add_subcommand("recommend", "construct routes for an instance");
  rec_cmd->add_option("--instance", rec.instance, "instance JSON path")->required();
  rec_cmd->add_option("--method", rec.method, "gr | topk | ran | lcp | lb")
      ->required()
      ->check(CLI::IsMember({"gr", "topk", "ran", "lcp", "lb"}));
  rec_cmd->add_option("--out", rec.out, "recommendation JSON path (not with lb)");
  rec_cmd->add_option("--trace-out", rec.trace_out,
                      "greedy trace path (default: <out>.trace.json)");
  rec_cmd->add_option("--engine", rec.engine, "objective engine for gr")
      ->check(CLI::IsMember({"sa", "se"}));
  rec_cmd->add_option("--seed", rec.seed, "seed (required for ran)");
  rec_cmd->add_option("--pool", rec.pool, "pool size for lcp");
  rec_cmd->add_option("--threads", rec.threads, "worker threads (0 = hardware)");
  rec_cmd->add_option("--max-states", rec.max_states, "outcome-state cap");

  EvaluateArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("evaluate", "score a recommendation file");
  eval_cmd->add_option("--instance", eval.instance, "instance JSON path")->required();
  eval_cmd->add_option("--recommendation", eval.recommendation, "recommendation JSON path")
      ->required();
  eval_cmd->add_option("--engine", eval.engine, "sa | se | both")
      ->check(CLI::IsMember({"sa", "se", "both"}));
  eval_cmd->add_option("--max-states", eval.max_states, "outcome-state cap");

  SimulateArgs sim;
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "replay passenger streams against recommendations");
  sim_cmd->add_option("--instance", sim.instance, "instance JSON path")->required();
  sim_cmd->add_option("--rec", sim.recs, "recommendation file, optionally name=path")
      ->required()
      ->take_all();
  CLI::Option* events_opt =
      sim_cmd->add_option("--events", sim.events, "replay a recorded event CSV instead");
  CLI::Option* days_opt = sim_cmd->add_option("--days", sim.days, "independent day streams");
  CLI::Option* horizon_opt =
      sim_cmd->add_option("--horizon", sim.horizon, "stream horizon in seconds");
  CLI::Option* seed_opt = sim_cmd->add_option("--seed", sim.seed, "stream seed");
  events_opt->excludes(days_opt)->excludes(horizon_opt)->excludes(seed_opt);
  sim_cmd->add_option("--out", sim.out, "write the JSON report here");
  sim_cmd->add_option("--format", sim.format, "stdout format")
      ->check(CLI::IsMember({"csv", "json"}));

  BenchArgs bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time greedy construction under both engines");
  bench_cmd->add_option("--cell", bench.cells, "grid cell N,K,L (repeatable)")->required();
  bench_cmd->add_option("--seed", bench.seed, "instance seed");
  bench_cmd->add_option("--threads", bench.threads, "worker threads (0 = hardware)");
  bench_cmd->add_option("--max-states", bench.max_states, "skip cells above this state count");
  bench_cmd->add_option("--format", bench.format, "stdout format")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*ingest_cmd) return run_ingest(ingest);
    if (*rec_cmd) return run_recommend(rec);
    if (*eval_cmd) return run_evaluate(eval);
    if (*sim_cmd) return run_simulate(sim);
    if (*bench_cmd) return run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
