#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace ktab {

inline int effectiveJobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static partition of [0, n) over a worker pool.  fn must be safe to call
// concurrently on disjoint indices.
inline void parallelFor(int jobs, long n, const std::function<void(long)>& fn) {
  jobs = effectiveJobs(jobs);
  if (n <= 0) return;
  jobs = static_cast<int>(std::min<long>(jobs, n));
  if (jobs == 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(jobs));
  std::atomic<long> next{0};
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        long i = next.fetch_add(1);
        if (i >= n) break;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace ktab
