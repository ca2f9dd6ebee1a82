#include "tvball/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tvball {

int worker_count() {
  static int n = [] {
    int hw = (int)std::thread::hardware_concurrency();
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("TVBALL_THREADS")) {
      int cap = std::atoi(env);
      if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
  }();
  return n;
}

void parallel_for(int n, const std::function<void(int, int)>& fn) {
  int workers = std::min(worker_count(), n);
  if (workers <= 1 || n < 64) {
    if (n > 0) fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int b = w * chunk;
    int e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace tvball
