#include "csn/parallel.hpp"

#include <cstdlib>
#include <string>

namespace csn {

unsigned thread_cap() {
  if (const char* env = std::getenv("CS_NEIGHBORLY_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return unsigned(v);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_for(int n, const std::function<void(int)>& f) {
  unsigned workers = thread_cap();
  if (n <= 1 || workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  if (workers > unsigned(n)) workers = unsigned(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = int(w); i < n; i += int(workers)) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace csn
