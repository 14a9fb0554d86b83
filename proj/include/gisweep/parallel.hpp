#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace gisweep {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Splits [0, count) into contiguous chunks, one thread per chunk.
// fn(begin, end) must only write cells owned by its own range, which keeps
// results independent of the thread count.
template <typename Fn>
void parallel_for(std::int64_t count, int threads, Fn&& fn) {
  if (count <= 0) return;
  std::int64_t workers =
      std::min<std::int64_t>(resolve_threads(threads), count);
  if (workers <= 1) {
    fn(std::int64_t{0}, count);
    return;
  }
  const std::int64_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (std::int64_t t = 0; t < workers; ++t) {
    const std::int64_t begin = t * chunk;
    const std::int64_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace gisweep
