#ifndef GRUNDY_PARALLEL_HPP
#define GRUNDY_PARALLEL_HPP

#include <functional>
#include <thread>
#include <vector>

namespace grundy {

/// Run fn(i) for i in [begin, end), index-sharded over `workers`
/// threads. Callers regain determinism by storing results per index.
inline void parallel_for(long long begin, long long end, int workers,
                         const std::function<void(long long)>& fn) {
  if (workers <= 1 || end - begin <= 1) {
    for (long long i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (long long i = begin + w; i < end; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace grundy

#endif  // GRUNDY_PARALLEL_HPP
