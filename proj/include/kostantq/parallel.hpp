#pragma once

// Minimal data-parallel reduction. The thread count is capped by the
// KOSTANTQ_THREADS environment variable (unset: hardware concurrency).

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace kostantq {

inline unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("KOSTANTQ_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    } catch (...) {
    }
  }
  return hw;
}

/// Sums term(i) for i in [0, count). Each worker owns a contiguous block and
/// its own accumulator; blocks are merged in index order.
template <class T, class Term>
T parallel_sum(std::size_t count, Term term, T zero = T{}) {
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(thread_budget(), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    T acc = zero;
    for (std::size_t i = 0; i < count; ++i) acc += term(i);
    return acc;
  }
  std::vector<T> partial(workers, zero);
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t block = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = w * block;
      const std::size_t hi = std::min(count, lo + block);
      try {
        for (std::size_t i = lo; i < hi; ++i) partial[w] += term(i);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  T acc = zero;
  for (auto& p : partial) acc += p;
  return acc;
}

}  // namespace kostantq
