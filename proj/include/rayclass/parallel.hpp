#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace rayclass {

/// Thread count for parallel sweeps. A positive request wins; otherwise
/// RAYCLASS_THREADS, then the hardware concurrency. Always 1 when MPFR was
/// built without thread-local caches.
int resolve_threads(int requested = 0);

/// Applies f to 0..n-1 on up to `threads` workers. Results keep index order.
/// The first exception thrown by any call is rethrown after all workers join.
template <class F>
auto parallel_map(std::size_t n, F f, int threads = 0) -> std::vector<std::invoke_result_t<F, std::size_t>> {
  using R = std::invoke_result_t<F, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::size_t workers = static_cast<std::size_t>(resolve_threads(threads));
  if (workers > n) workers = n;

  std::exception_ptr failure;
  std::mutex lock;
  auto run = [&](std::size_t first) {
    for (std::size_t i = first; i < n; i += workers) {
      {
        std::lock_guard<std::mutex> g(lock);
        if (failure) return;
      }
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        std::lock_guard<std::mutex> g(lock);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace rayclass
