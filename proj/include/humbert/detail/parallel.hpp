#pragma once

// Minimal fork-join helper: runs f(i) for i in [0, n) over a few threads.
// Each index is written by exactly one worker, so callers collect results in
// a pre-sized vector without locking.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace humbert::detail {

template <class F>
void parallel_for(std::size_t n, F&& f) {
  const std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, n / 16 + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += workers) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace humbert::detail
