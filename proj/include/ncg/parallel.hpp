#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ncg {

/// Hardware concurrency, capped by the NCG_THREADS env var when set.
inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int n = hw ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("NCG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1 && v < n) n = static_cast<int>(v);
  }
  return std::max(1, n);
}

/// Runs f(i) for every i in [0, count) across workers. Each index is handed
/// out exactly once, so results are deterministic as long as f(i) touches
/// only its own slot. f must not throw.
template <class F>
void parallel_for(int count, F f) {
  int workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace ncg
