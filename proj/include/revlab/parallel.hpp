#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace revlab {

// Worker cap: hardware concurrency, overridable downward via REVLAB_THREADS.
inline unsigned thread_cap() {
  static const unsigned cap = [] {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("REVLAB_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1 && static_cast<unsigned>(v) < hw) return static_cast<unsigned>(v);
    }
    return hw;
  }();
  return cap;
}

// Runs fn(begin, end) over contiguous chunks of [0, n). Callers aggregate the
// per-chunk results afterwards in index order, which keeps reductions
// deterministic regardless of the thread count.
inline void parallel_chunks(size_t n, const std::function<void(size_t, size_t, size_t)>& fn) {
  const size_t workers = std::min<size_t>(thread_cap(), std::max<size_t>(1, n));
  if (workers <= 1 || n < 2) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const size_t chunk = (n + workers - 1) / workers;
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = w * chunk;
    const size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fn, w, begin, end);
  }
  for (auto& th : pool) th.join();
}

}  // namespace revlab
