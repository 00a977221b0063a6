#include "bt/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace bt {

namespace {

std::atomic<int> g_default_threads{0};

}  // namespace

void set_default_threads(int threads) { g_default_threads.store(threads); }

int default_threads() {
  int t = g_default_threads.load();
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  return t > 0 ? t : 1;
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (threads <= 0) threads = default_threads();
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count ? count : 1);
  if (workers <= 1) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace bt
