#include "hopfforge/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hopfforge {

static std::atomic<size_t> g_override{0};

void set_worker_override(size_t n) { g_override.store(n); }

size_t worker_count() {
  size_t ov = g_override.load();
  if (ov > 0) return ov;
  const char* env = std::getenv("HOPF_FORGE_THREADS");
  if (env && *env) {
    long n = std::atol(env);
    if (n > 0) return (size_t)n;
  }
  size_t hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn) {
  size_t workers = worker_count();
  if (workers <= 1 || n < 2 * workers) {
    fn(0, n);
    return;
  }
  size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    size_t b = w * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hopfforge
