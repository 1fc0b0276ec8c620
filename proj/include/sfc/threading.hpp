#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sfc {

// Worker count for parallel sections: SFC_THREADS when set to a positive
// integer, otherwise the hardware concurrency (at least 1).
inline unsigned worker_count() {
  if (const char* env = std::getenv("SFC_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Applies fn to every index in [0, n) across `threads` workers (0 = pick via
// worker_count) and returns the results in index order. Indices are handed out
// through a shared counter, so which thread runs an index varies between runs
// but the output vector does not. The first exception aborts remaining work
// and is rethrown after the pool joins.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned threads,
                            const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(n);
  if (n == 0) return out;
  std::size_t want = threads == 0 ? worker_count() : threads;
  unsigned k = static_cast<unsigned>(std::min(want, n));
  if (k <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> bail{false};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(k);
  for (unsigned t = 0; t < k; ++t) {
    pool.emplace_back([&] {
      while (!bail.load(std::memory_order_relaxed)) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        try {
          out[i] = fn(i);
        } catch (...) {
          {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
          }
          bail.store(true);
          break;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace sfc
