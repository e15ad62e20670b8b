#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace weylm::detail {

/// Runs fn(shard, begin, end) over `jobs` contiguous shards of [0, n) and returns the
/// per-shard results in shard order, so the merged output never depends on scheduling.
template <class Fn>
auto run_sharded(std::size_t n, int jobs, Fn fn) {
  using Result = decltype(fn(std::size_t{0}, std::size_t{0}, std::size_t{0}));
  const std::size_t shards = std::max<std::size_t>(1, std::min<std::size_t>(jobs > 0 ? jobs : 1, n));
  std::vector<Result> results(shards);
  auto bounds = [&](std::size_t k) { return n * k / shards; };
  if (shards == 1) {
    results[0] = fn(0, 0, n);
    return results;
  }
  std::vector<std::thread> workers;
  workers.reserve(shards);
  for (std::size_t k = 0; k < shards; ++k) {
    workers.emplace_back([&, k] { results[k] = fn(k, bounds(k), bounds(k + 1)); });
  }
  for (auto& t : workers) t.join();
  return results;
}

}  // namespace weylm::detail
