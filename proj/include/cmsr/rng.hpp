#pragma once

#include <cmath>
#include <cstdint>

namespace cmsr {

// Seeded generator used everywhere randomness is needed. SplitMix64 is fully
// specified by its update constants, so streams are reproducible across
// platforms and standard-library implementations (std::*_distribution is not).
inline constexpr const char* kRngAlgorithm = "splitmix64";

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53-bit mantissa
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n), unbiased via rejection
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // uniform in [lo, hi]
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // exponential inter-arrival draw with the given rate (events/second)
  double next_exponential(double rate) {
    // next_double() < 1, so the log argument is strictly positive
    return -std::log(1.0 - next_double()) / rate;
  }

 private:
  std::uint64_t state_;
};

// Derives an independent substream seed, e.g. one per simulated day or point.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
  return g.next();
}

}  // namespace cmsr
