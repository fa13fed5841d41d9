#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace liedual {

/// Number of worker threads used by sweeps. 0 means hardware concurrency.
inline std::atomic<unsigned>& worker_setting() {
  static std::atomic<unsigned> jobs{0};
  return jobs;
}

inline void set_workers(unsigned jobs) { worker_setting() = jobs; }

inline unsigned workers() {
  const unsigned j = worker_setting();
  if (j) return j;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates f(0..n-1) on a pool and returns results in index order. The first
/// exception thrown by any task is rethrown after all workers stop.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using T = decltype(f(std::size_t{}));
  std::vector<std::optional<T>> slots(n);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::atomic_flag error_set = ATOMIC_FLAG_INIT;
  auto run = [&] {
    for (std::size_t i; !failed && (i = next++) < n;) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        if (!error_set.test_and_set()) error = std::current_exception();
        failed = true;
      }
    }
  };
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers(), n));
  if (count <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace liedual
