#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace graphbench {

struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Splits [0, m) into `workers` contiguous ranges whose sizes differ by at
/// most one; the first m % workers ranges get the extra element.
std::vector<IndexRange> parallel_partition_bounds(std::size_t m, std::size_t workers);

/// Runs fn(worker_index) on `workers` threads (the caller is worker 0) and
/// joins them. The first exception thrown by any worker is rethrown.
template <typename Fn>
void run_workers(std::size_t workers, Fn&& fn) {
  if (workers <= 1) {
    fn(std::size_t{0});
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto guarded = [&](std::size_t w) {
    try {
      fn(w);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(guarded, w);
    guarded(0);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace graphbench
