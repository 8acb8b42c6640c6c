#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ixpgraph::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs body(worker, item) for every item in [0, count) on up to `threads`
// workers, handing out items in small blocks. The first exception thrown by
// any worker is rethrown on the calling thread. Worker ids stay below
// resolve_threads(threads), so per-worker accumulators can be sized with it.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  constexpr std::size_t kBlock = 8;
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(1, count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(0U, i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](unsigned worker) {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kBlock);
        if (begin >= count) break;
        const std::size_t end = std::min(count, begin + kBlock);
        for (std::size_t i = begin; i < end; ++i) body(worker, i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ixpgraph::detail
