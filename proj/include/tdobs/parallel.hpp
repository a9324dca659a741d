#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tdobs {

// Runs fn(i) for i in [0, count) on `workers` threads, handing out indices
// in chunks. With one worker everything runs inline on the caller's thread.
// The first exception thrown by any worker is rethrown after all join.
template <typename Fn>
void parallel_for_index(std::size_t count, int workers, Fn fn,
                        std::size_t chunk = 1) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (chunk == 0) chunk = 1;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(chunk);
        if (begin >= count) return;
        const std::size_t end = std::min(begin + chunk, count);
        for (std::size_t i = begin; i < end; ++i) {
          if (failed.load(std::memory_order_relaxed)) return;
          fn(i);
        }
      }
    } catch (...) {
      failed.store(true, std::memory_order_relaxed);
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) threads.emplace_back(work);
  work();
  for (auto& thread : threads) thread.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace tdobs
