#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace rexosc::numerics {

/// Worker count: hardware concurrency, capped by REXOSC_THREADS when set.
std::size_t thread_cap();

/// Runs body(begin, end) over contiguous chunks of [0, n). Blocks until done.
/// Small ranges run inline.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t min_chunk = 4096) {
  const std::size_t workers = std::min(thread_cap(), (n + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1));
  if (workers <= 1) {
    body(std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(n, b + chunk);
    if (b < e) pool.emplace_back([&body, b, e] { body(b, e); });
  }
  body(std::size_t{0}, std::min(n, chunk));
}

}  // namespace rexosc::numerics
