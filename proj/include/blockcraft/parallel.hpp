#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace blockcraft {

/// Number of worker threads used by parallel sweeps. 0 means hardware concurrency.
void set_worker_count(unsigned workers);
unsigned worker_count();

namespace detail {
inline thread_local bool inside_worker = false;
}

/// Runs body(i) for i in [0, count) on the configured workers. Each index is
/// processed exactly once; callers write results into slot i so the outcome
/// does not depend on scheduling. The first exception thrown is rethrown. Calls made from inside
/// a worker run serially.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t threads = detail::inside_worker ? 1 : std::min<std::size_t>(worker_count(), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        detail::inside_worker = true;
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

/// Maps f over [0, count) in parallel, preserving index order.
template <typename Result, typename F>
std::vector<Result> parallel_map(std::size_t count, F&& f) {
  std::vector<Result> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace blockcraft
