#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace mlbiv {

/// Worker count: MLBIV_THREADS if set to a positive integer, else the
/// hardware concurrency.
int thread_count();

/// Calls fn(begin, end) on contiguous static chunks of [0, n). Chunks write
/// disjoint outputs, so results do not depend on the thread count.
template <class F>
void parallel_for(std::size_t n, F&& fn, std::size_t min_chunk = 256) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()),
                                                    std::max<std::size_t>(1, n / min_chunk));
  if (workers <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  fn(std::size_t{0}, std::min(n, chunk));
  for (auto& t : pool) t.join();
}

}  // namespace mlbiv
