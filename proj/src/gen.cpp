#include "cmsr/gen.hpp"

#include <stdexcept>

#include "cmsr/rng.hpp"

namespace cmsr {

Instance synth_instance(const SynthSpec& spec) {
  if (spec.n_points < 1) throw std::invalid_argument("n_points must be at least 1");
  if (spec.route_len < 1 || spec.route_len > spec.n_points) {
    throw std::invalid_argument("route length must be in 1..n_points");
  }
  if (spec.fleet < 1) throw std::invalid_argument("fleet must be at least 1");
  if (!(spec.rate_lo > 0.0) || spec.rate_hi < spec.rate_lo) {
    throw std::invalid_argument("rate range must satisfy 0 < lo <= hi");
  }
  if (spec.time_lo < 0 || spec.time_hi < spec.time_lo) {
    throw std::invalid_argument("time range must satisfy 0 <= lo <= hi");
  }

  SplitMix64 rng(spec.seed);
  Instance inst;
  inst.n_points = spec.n_points;
  inst.rates.resize(spec.n_points);
  for (double& rate : inst.rates) rate = rng.next_in(spec.rate_lo, spec.rate_hi);
  inst.travel = TravelTimeMatrix(spec.n_points);
  std::int64_t sum = 0;
  std::int64_t cells = 0;
  const std::uint64_t span = static_cast<std::uint64_t>(spec.time_hi - spec.time_lo) + 1;
  for (PointId a = 0; a <= spec.n_points; ++a) {
    for (PointId b = 0; b <= spec.n_points; ++b) {
      if (a == b) continue;
      const std::int64_t t = spec.time_lo + static_cast<std::int64_t>(rng.next_below(span));
      inst.travel.set(a, b, t);
      sum += t;
      ++cells;
    }
  }
  inst.penalty = cells > 0 ? (sum + cells / 2) / cells : 0;
  inst.route_len = spec.route_len;
  inst.fleet = spec.fleet;
  return validate_instance(std::move(inst));
}

}  // namespace cmsr
