#include "cmsr/recommend.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cmsr/rng.hpp"
#include "cmsr/single_route.hpp"
#include "parallel.hpp"

namespace cmsr {

std::pair<Recommendation, GreedyTrace> greedy_recommend(const Instance& inst,
                                                        const GreedyOptions& opts) {
  const int k_routes = inst.fleet;
  const int target_len = inst.route_len;
  Recommendation rec;
  rec.routes.resize(k_routes);
  GreedyTrace trace;
  trace.reserve(static_cast<std::size_t>(k_routes) * target_len);

  struct Candidate {
    int route;
    PointId point;
  };
  for (int iteration = 1; iteration <= k_routes * target_len; ++iteration) {
    std::vector<Candidate> candidates;
    for (int j = 0; j < k_routes; ++j) {
      if (rec.routes[j].size() >= target_len) continue;
      for (PointId i = 1; i <= inst.n_points; ++i) {
        if (!rec.routes[j].contains(i)) candidates.push_back(Candidate{j, i});
      }
    }
    if (candidates.empty()) throw std::runtime_error("greedy ran out of extensions");

    // candidate evaluations are independent; the commit below is a
    // deterministic reduction, so scheduling cannot change the result
    std::vector<double> objective(candidates.size());
    detail::parallel_for(candidates.size(), opts.threads, [&](std::size_t c) {
      Recommendation trial = rec;
      trial.routes[candidates[c].route].points.push_back(candidates[c].point);
      objective[c] = evaluate(trial, inst, opts.engine);
    });

    std::size_t best = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c) {
      if (objective[c] < objective[best]) best = c;
      // candidates are generated in (route, point) order, so the first
      // minimum already honors the tie rule
    }
    rec.routes[candidates[best].route].points.push_back(candidates[best].point);
    trace.push_back(GreedyStep{iteration, candidates[best].route, candidates[best].point,
                               objective[best]});
  }
  return {std::move(rec), std::move(trace)};
}

Recommendation random_recommend(const Instance& inst, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Recommendation rec;
  rec.routes.reserve(inst.fleet);
  std::vector<PointId> pool(inst.n_points);
  for (int k = 0; k < inst.fleet; ++k) {
    for (int i = 0; i < inst.n_points; ++i) pool[i] = i + 1;
    Route route;
    route.points.reserve(inst.route_len);
    // partial Fisher-Yates: uniform over ordered distinct-point sequences
    for (int pos = 0; pos < inst.route_len; ++pos) {
      const std::size_t pick =
          pos + static_cast<std::size_t>(rng.next_below(inst.n_points - pos));
      std::swap(pool[pos], pool[pick]);
      route.points.push_back(pool[pos]);
    }
    rec.routes.push_back(std::move(route));
  }
  return rec;
}

Recommendation lcp_style_recommend(const Instance& inst, int pool, int threads) {
  if (pool < 1) throw std::invalid_argument("pool must be at least 1");
  const std::vector<RouteScore> best = best_routes(inst, pool, threads);
  Recommendation rec;
  rec.routes.reserve(inst.fleet);
  for (int k = 0; k < inst.fleet; ++k) {
    rec.routes.push_back(best[static_cast<std::size_t>(k) % best.size()].route);
  }
  return rec;
}

}  // namespace cmsr
