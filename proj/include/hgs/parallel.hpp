#pragma once

// Parallel map over independent work items with results in input order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace hgs {

/// Number of worker threads: hardware concurrency, at least one.
inline unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

/// out[i] = f(items[i]). Items are claimed dynamically by up to `threads`
/// workers; the first exception thrown by any call is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F&& f, unsigned threads = worker_count())
    -> std::vector<decltype(f(items.front()))> {
  using R = decltype(f(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        slots[i].emplace(f(items[i]));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = items.size();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace hgs
