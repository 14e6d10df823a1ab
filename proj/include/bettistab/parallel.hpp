#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace bettistab::detail {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(chunk_index, begin, end) over `workers` contiguous chunks of
/// [0, count). The partition depends only on (count, workers), so callers
/// that merge per-chunk results with commutative sums get identical output
/// for every worker count.
inline void parallel_chunks(std::size_t count, unsigned workers,
                            const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
  workers = resolve_workers(workers);
  if (count == 0) return;
  if (workers <= 1 || count == 1) {
    fn(0, 0, count);
    return;
  }

  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t base = count / workers, extra = count % workers;
  std::size_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t len = base + (w < extra ? 1 : 0);
    const std::size_t end = begin + len;
    threads.emplace_back([&, w, begin, end] {
      try {
        if (begin < end) fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace bettistab::detail
