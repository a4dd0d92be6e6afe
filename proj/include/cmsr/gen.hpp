#pragma once

#include <cstdint>

#include "cmsr/core.hpp"

namespace cmsr {

// Synthetic instance parameters: uniform rates, uniform integer travel times
// drawn independently per direction, penalty = mean off-diagonal time.
struct SynthSpec {
  int n_points = 10;
  int fleet = 2;
  int route_len = 3;
  std::uint64_t seed = 1;
  double rate_lo = 0.001;  // events/second
  double rate_hi = 0.02;
  std::int64_t time_lo = 60;  // seconds
  std::int64_t time_hi = 900;
};

Instance synth_instance(const SynthSpec& spec);

}  // namespace cmsr
