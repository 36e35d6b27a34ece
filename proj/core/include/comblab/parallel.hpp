#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace comblab {

// Worker count: COMBLAB_THREADS if set to a positive integer, else the
// hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("COMBLAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, n_items) into fixed chunks of chunk_size and evaluates
// f(begin, end) for each on a pool of threads. Results come back in chunk
// order, so any in-order reduction is independent of the thread count.
template <class R, class F>
std::vector<R> run_chunks(std::int64_t n_items, std::int64_t chunk_size, F&& f) {
  const std::int64_t n_chunks = n_items <= 0 ? 0 : (n_items + chunk_size - 1) / chunk_size;
  std::vector<R> results(static_cast<std::size_t>(n_chunks));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        const std::int64_t begin = c * chunk_size;
        results[static_cast<std::size_t>(c)] = f(begin, std::min(n_items, begin + chunk_size));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n_chunks);
      }
    }
  };
  const auto threads = static_cast<std::int64_t>(worker_count());
  const std::int64_t spawn = std::min(threads, n_chunks) - 1;
  std::vector<std::thread> pool;
  for (std::int64_t i = 0; i < spawn; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace comblab
