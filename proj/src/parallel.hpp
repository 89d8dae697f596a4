#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace bdom::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Smallest i in [0, count) with pred(i), evaluated on up to `threads` workers.
/// Every index below the returned one is evaluated, so the answer matches a
/// sequential scan regardless of scheduling.
template <class Pred>
std::optional<std::uint64_t> first_match(std::uint64_t count, unsigned threads, Pred&& pred) {
  threads = std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(count, 1));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{count};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    try {
      for (;;) {
        const auto i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count || i >= best.load(std::memory_order_relaxed)) return;
        if (pred(i)) {
          auto cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  pool.clear();

  if (failure) std::rethrow_exception(failure);
  const auto found = best.load();
  if (found >= count) return std::nullopt;
  return found;
}

}  // namespace bdom::detail
