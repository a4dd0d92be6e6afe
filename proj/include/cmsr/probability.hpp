#pragma once

#include <vector>

#include "cmsr/core.hpp"

namespace cmsr {

// Probability that at least one passenger arrives within `delta` seconds at a
// point with the given Poisson rate: 1 - exp(-lambda * delta). Computed via
// expm1 so tiny lambda*delta products keep full precision.
double pickup_prob(double lambda, double delta);

// Per-point pickup probabilities for one instance. Point 0 (the initial
// position) has probability 0 for any interval.
class PickupModel {
 public:
  explicit PickupModel(const Instance& inst) : rates_(&inst.rates) {}

  double prob(PointId c, double delta) const {
    if (c == 0) return 0.0;
    return pickup_prob((*rates_)[static_cast<std::size_t>(c) - 1], delta);
  }

 private:
  const std::vector<double>* rates_;
};

// Unbiased arrival-rate estimate from consecutive inter-event intervals:
// lambda = (n - 1) / sum(t_j) with n = |intervals|. Requires n >= 2 and
// strictly positive intervals.
double estimate_rate(const std::vector<double>& intervals);

}  // namespace cmsr
