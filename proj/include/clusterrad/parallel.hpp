#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace clusterrad {

/// Worker count: CLUSTER_RADIUS_WORKERS wins over `requested`; 0 means
/// hardware concurrency.
inline int resolveWorkers(int requested = 0) {
  if (const char* env = std::getenv("CLUSTER_RADIUS_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(i) for i in [0, count) on up to `workers` threads. Each index
/// runs exactly once; callers write into slot i and reduce afterwards in index
/// order, which keeps results independent of the schedule.
template <class Body>
void parallelFor(std::size_t count, int workers, Body&& body) {
  const std::size_t threads = std::min<std::size_t>(std::max(1, workers), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errorMutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(errorMutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Pairwise sum in fixed order.
template <class T>
T pairwiseSum(const std::vector<T>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return T{};
  if (hi - lo <= 8) {
    T s{};
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwiseSum(v, lo, mid) + pairwiseSum(v, mid, hi);
}

template <class T>
T pairwiseSum(const std::vector<T>& v) {
  return pairwiseSum(v, 0, v.size());
}

}  // namespace clusterrad
