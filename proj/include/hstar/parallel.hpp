#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hstar {

/// Worker count for scans: hardware concurrency, capped by HSTARLAB_THREADS.
inline unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HSTARLAB_THREADS")) {
    try {
      long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // ignored: malformed caps fall back to the hardware default
    }
  }
  return n;
}

/// Splits [0, total) into contiguous chunks, runs `scan(begin, end)` on each,
/// and returns the per-chunk results in chunk order. Callers reduce the
/// results with a commutative operation, so output does not depend on the
/// worker count.
template <typename Result, typename Scan>
std::vector<Result> parallel_chunks(std::uint64_t total, Scan scan, unsigned workers = worker_count()) {
  constexpr std::uint64_t kMinChunk = 4096;
  std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total / kMinChunk));
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = scan(std::uint64_t{0}, total);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      threads.emplace_back([&, c] {
        const std::uint64_t begin = total / chunks * c + std::min(c, total % chunks);
        const std::uint64_t end = begin + total / chunks + (c < total % chunks ? 1 : 0);
        try {
          results[c] = scan(begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace hstar
