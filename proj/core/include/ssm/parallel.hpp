#ifndef SSM_PARALLEL_HPP
#define SSM_PARALLEL_HPP

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace ssm {

// Static range split across `workers` threads. Work items must write to
// disjoint slots keyed by their index; combined with per-item substreams
// this makes results independent of the worker count.
inline void parallel_for(std::size_t count, unsigned workers,
                         const std::function<void(std::size_t, std::size_t)>& body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1 || count <= 1) {
    body(0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = static_cast<std::size_t>(w) * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ssm

#endif  // SSM_PARALLEL_HPP
