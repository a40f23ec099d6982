#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace robin::detail {

struct ChunkRange {
  std::uint64_t lo;
  std::uint64_t hi;  // inclusive
};

inline std::vector<ChunkRange> split_range(std::uint64_t lo, std::uint64_t hi,
                                           std::uint64_t chunk) {
  std::vector<ChunkRange> out;
  if (lo > hi) return out;
  if (chunk == 0) chunk = 1;
  for (std::uint64_t a = lo; a <= hi;) {
    const std::uint64_t b = (hi - a >= chunk - 1) ? a + chunk - 1 : hi;
    out.push_back({a, b});
    if (b == hi) break;
    a = b + 1;
  }
  return out;
}

// Applies fn to each chunk, possibly concurrently, and returns the results
// in chunk order so downstream merges stay deterministic.
template <typename R, typename Fn>
std::vector<R> map_chunks(const std::vector<ChunkRange>& chunks, unsigned threads, Fn&& fn) {
  std::vector<R> results(chunks.size());
  if (chunks.empty()) return results;
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<std::size_t>(threads, chunks.size());

  if (threads <= 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i) results[i] = fn(chunks[i]);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= chunks.size() || failed.load()) return;
        try {
          results[i] = fn(chunks[i]);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(error);
  return results;
}

}  // namespace robin::detail
