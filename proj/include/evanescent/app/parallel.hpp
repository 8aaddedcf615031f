#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace evanescent::app {

int default_thread_count();

// Evaluates fn(0..n-1) on up to `threads` workers. Results are stored by
// index, so the output order never depends on scheduling. The first
// exception (lowest index) is rethrown after all workers join.
template <class R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& fn, int threads) {
  std::vector<R> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t count =
      std::max<std::size_t>(1, std::min<std::size_t>(n, threads > 0 ? threads : 1));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace evanescent::app
