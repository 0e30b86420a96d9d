#include "ftlab/lab/worker_pool.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

namespace ftlab::lab {

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t k = 0; k < threads; ++k)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
}

int workers_from_env(int fallback) {
  const char* env = std::getenv("FTLAB_WORKERS");
  if (!env) return fallback;
  int v = 0;
  const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
  if (ec != std::errc{} || *ptr != '\0' || v < 1) return fallback;
  return v;
}

}  // namespace ftlab::lab
