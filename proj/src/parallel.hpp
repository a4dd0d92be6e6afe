#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace cmsr::detail {

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for every i in [0, n). Work items must be independent; results
// must not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  threads = std::min<std::size_t>(resolve_threads(threads), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&fn, w, threads, n] {
      for (std::size_t i = w; i < n; i += threads) fn(i);
    });
  }
  for (std::thread& t : workers) t.join();
}

}  // namespace cmsr::detail
