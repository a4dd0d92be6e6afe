#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cmsr/collective.hpp"
#include "cmsr/core.hpp"

namespace cmsr {

// One committed greedy step: at `iteration` (1-based), `point` was appended
// to route `route` (0-based) and the objective after the commit was
// `objective`. A finished run has exactly K*L steps.
struct GreedyStep {
  int iteration = 0;
  int route = 0;
  PointId point = 0;
  double objective = 0.0;
};
using GreedyTrace = std::vector<GreedyStep>;

struct GreedyOptions {
  Engine engine = Engine::SE;
  int threads = 1;  // candidate evaluations per iteration run in parallel
};

// Builds a recommendation by repeatedly appending the single (route, point)
// extension with the smallest collective objective, starting from K empty
// routes. Ties break toward the lower route index, then the lower point id.
std::pair<Recommendation, GreedyTrace> greedy_recommend(const Instance& inst,
                                                        const GreedyOptions& opts = {});

// K routes drawn independently and uniformly from the ordered distinct-point
// sequences of length L. Deterministic per seed.
Recommendation random_recommend(const Instance& inst, std::uint64_t seed);

// Round-robin assignment of the `pool` best independent routes: taxi k gets
// pool route k mod pool. Reproduces only the assignment scheme of the LCP
// baseline, not its internal search.
Recommendation lcp_style_recommend(const Instance& inst, int pool = 5, int threads = 1);

}  // namespace cmsr
