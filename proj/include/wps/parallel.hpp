#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace wps {

/// Worker count: $WPS_THREADS if set to a positive integer, else the hardware count.
inline unsigned thread_count() {
  if (const char* env = std::getenv("WPS_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline std::size_t chunk_count(std::uint64_t total, unsigned threads = thread_count()) {
  return static_cast<std::size_t>(
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(std::max(1u, threads)) * 4));
}

/// Splits [0, total) into contiguous chunks and calls fn(chunk, begin, end) for
/// each, possibly concurrently. There are chunk_count(total, threads) chunks;
/// callers reduce per-chunk results in chunk order.
template <class Fn>
std::size_t parallel_chunks(std::uint64_t total, Fn&& fn, unsigned threads = thread_count()) {
  if (total == 0) return 0;
  const std::size_t chunks = chunk_count(total, threads);
  auto bounds = [&](std::size_t c) { return total * c / chunks; };
  if (threads <= 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c, bounds(c), bounds(c + 1));
    return chunks;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::size_t next = 0;
  std::mutex next_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t c;
      {
        std::lock_guard lock(next_mutex);
        if (next == chunks) return;
        c = next++;
      }
      try {
        fn(c, bounds(c), bounds(c + 1));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return chunks;
}

}  // namespace wps
