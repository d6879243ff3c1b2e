#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hamrep {

/// Number of worker threads to use: min(hardware concurrency, HAMREP_THREADS
/// if set). Always at least 1.
int worker_count();

/// Evaluates fn(i) for i in [0, n) across workers and returns the results in
/// index order, so the output is identical to a sequential run regardless of
/// scheduling. fn must be safe to call concurrently on distinct i.
template <typename F>
auto parallel_map(std::size_t n, F&& fn) -> std::vector<decltype(fn(std::size_t{0}))> {
  using T = decltype(fn(std::size_t{0}));
  std::vector<T> results(n);
  if (n == 0) return results;

  const int workers = std::min<int>(worker_count(), static_cast<int>(n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = w; i < n; i += workers) results[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace hamrep
