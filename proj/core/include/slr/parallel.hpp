#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace slr {

// Evaluate fn(i) for i in [0, n) on `workers` threads. Each index writes its
// own output slot, so results are identical for every worker count.
template <typename Fn>
void parallel_for_index(std::size_t n, int workers, Fn&& fn) {
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
}

} // namespace slr
