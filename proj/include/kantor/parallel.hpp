#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace kantor {

/// Smallest index in [0, total) where pred returns false, or nullopt.
/// pred must be a pure function of the index; the result is then
/// independent of the job count, so parallel sweeps stay deterministic.
inline std::optional<size_t> first_violation(size_t total,
                                             const std::function<bool(size_t)>& pred,
                                             int jobs = 1) {
  if (jobs <= 1 || total < 64) {
    for (size_t i = 0; i < total; ++i)
      if (!pred(i)) return i;
    return std::nullopt;
  }
  const size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs), total);
  std::atomic<size_t> best{total};
  std::vector<std::thread> threads;
  threads.reserve(nthreads);
  const size_t chunk = (total + nthreads - 1) / nthreads;
  for (size_t t = 0; t < nthreads; ++t) {
    threads.emplace_back([&, t] {
      const size_t lo = t * chunk;
      const size_t hi = std::min(total, lo + chunk);
      for (size_t i = lo; i < hi; ++i) {
        if (best.load(std::memory_order_relaxed) <= lo) return;
        if (!pred(i)) {
          size_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  const size_t found = best.load();
  if (found == total) return std::nullopt;
  return found;
}

}  // namespace kantor
