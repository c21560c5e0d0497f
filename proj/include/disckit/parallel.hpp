#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace disckit {

// Runs fn(begin, end) over a fixed chunking of [0, n). Chunk boundaries
// depend only on (n, threads), and callers write to disjoint output slots,
// so results are identical for any thread count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    fn(std::size_t{0}, n);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::size_t chunk = (n + nthreads - 1) / nthreads;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(begin + chunk, n);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace disckit
