#include "cmsr/probability.hpp"

#include <cmath>
#include <stdexcept>

namespace cmsr {

double pickup_prob(double lambda, double delta) {
  if (delta < 0.0) throw std::invalid_argument("negative time interval");
  return -std::expm1(-lambda * delta);
}

double estimate_rate(const std::vector<double>& intervals) {
  const std::size_t n = intervals.size();
  if (n < 2) throw std::invalid_argument("rate estimation needs at least 2 intervals");
  double sum = 0.0;
  for (double t : intervals) {
    if (!(t > 0.0)) throw std::invalid_argument("intervals must be positive");
    sum += t;
  }
  return static_cast<double>(n - 1) / sum;
}

}  // namespace cmsr
