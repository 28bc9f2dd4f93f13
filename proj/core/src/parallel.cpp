#include "rlab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace rlab {
namespace {

int g_workers = 0;  // 0 = not yet resolved

int resolve_workers() {
  if (const char* env = std::getenv("RESTRICT_LAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

}  // namespace

int worker_count() {
  if (g_workers <= 0) g_workers = resolve_workers();
  return g_workers;
}

void set_worker_count(int n) { g_workers = n > 0 ? n : 0; }

void parallel_blocks(std::int64_t n_blocks,
                     const std::function<void(std::int64_t)>& fn) {
  int workers = worker_count();
  if (workers <= 1 || n_blocks <= 1) {
    for (std::int64_t b = 0; b < n_blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto run = [&] {
    for (;;) {
      std::int64_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      fn(b);
    }
  };
  std::vector<std::thread> pool;
  int spawn = int(std::min<std::int64_t>(workers, n_blocks)) - 1;
  pool.reserve(std::size_t(spawn));
  for (int i = 0; i < spawn; ++i) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

}  // namespace rlab
