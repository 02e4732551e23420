#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace cnls::detail {

template <typename T>
std::vector<T> unwrap(std::vector<std::optional<T>>& slots) {
  std::vector<T> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Evaluates fn(i) for i in [0, count) on a small thread pool and returns the
// results in index order. The first exception thrown by any task is rethrown.
template <typename Fn>
auto parallel_map(std::size_t count, Fn fn, bool parallel = true) {
  using Result = decltype(fn(std::size_t{}));
  std::vector<std::optional<Result>> slots(count);
  const std::size_t workers =
      parallel ? std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency())) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
    return unwrap(slots);
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return unwrap(slots);
}

}  // namespace cnls::detail
