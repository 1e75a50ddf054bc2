#ifndef BPME_PARALLEL_HPP
#define BPME_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace bpme {

inline unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Runs fn(task, begin, end) over [0, n_items) split into fixed-size chunks
// and returns one result slot per chunk, in chunk order. Chunk boundaries
// depend only on n_items, so reducing the slots in order gives the same
// floating-point result for every thread count.
template <class Result, class Fn>
std::vector<Result> run_chunked(std::uint64_t n_items, Fn&& fn,
                                unsigned threads = default_threads(),
                                std::uint64_t chunk = 8192) {
  const std::uint64_t n_tasks = n_items == 0 ? 0 : (n_items + chunk - 1) / chunk;
  std::vector<Result> slots(static_cast<std::size_t>(n_tasks));
  if (n_tasks == 0) return slots;

  auto worker_loop = [&](std::atomic<std::uint64_t>& next) {
    for (;;) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= n_tasks) break;
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(begin + chunk, n_items);
      slots[static_cast<std::size_t>(t)] = fn(t, begin, end);
    }
  };

  if (threads <= 1 || n_tasks == 1) {
    std::atomic<std::uint64_t> next{0};
    worker_loop(next);
    return slots;
  }

  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, n_tasks));
  pool.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w)
    pool.emplace_back([&] { worker_loop(next); });
  for (auto& th : pool) th.join();
  return slots;
}

}  // namespace bpme

#endif  // BPME_PARALLEL_HPP
