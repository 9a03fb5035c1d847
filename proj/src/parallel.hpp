#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pawns::detail {

/// Splits [begin, end) into `workers` contiguous chunks and runs
/// fn(lo, hi, worker) on each; the first exception thrown is rethrown.
template <class Index, class Fn>
void parallel_chunks(Index begin, Index end, unsigned workers, Fn&& fn) {
  if (end <= begin) return;
  const Index total = end - begin;
  workers = static_cast<unsigned>(std::max<Index>(1, std::min<Index>(workers, total)));
  if (workers == 1) {
    fn(begin, end, 0U);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const Index lo = begin + total * w / workers;
    const Index hi = begin + total * (w + 1) / workers;
    threads.emplace_back([&, lo, hi, w] {
      try {
        fn(lo, hi, w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  threads.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace pawns::detail
