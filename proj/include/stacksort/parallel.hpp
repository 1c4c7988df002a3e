#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace stacksort {

// Runs work(block) for block in [0, blocks) on up to jobs threads. Blocks are
// handed out in increasing order. The first exception thrown is rethrown.
template <typename Work>
void run_blocks(std::size_t blocks, unsigned jobs, Work&& work) {
  const std::size_t threads = std::min<std::size_t>(std::max(1u, jobs), blocks);
  if (threads <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) work(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t b = next++; b < blocks; b = next++) {
          try {
            work(b);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace stacksort
