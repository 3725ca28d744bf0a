#pragma once

#include <algorithm>
#include <future>
#include <thread>
#include <vector>

namespace starmap::detail {

/// Runs `unit(0..count-1)` across worker threads and returns the results in
/// index order, so reductions over them are deterministic.
template <typename Fn>
auto map_units(int count, Fn&& unit) -> std::vector<decltype(unit(0))> {
  using Result = decltype(unit(0));
  std::vector<Result> results(static_cast<std::size_t>(count));
  const int workers = std::max(1, std::min<int>(count, static_cast<int>(std::thread::hardware_concurrency())));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = unit(i);
    return results;
  }
  std::vector<std::future<void>> pending;
  for (int w = 0; w < workers; ++w) {
    pending.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < count; i += workers) results[static_cast<std::size_t>(i)] = unit(i);
    }));
  }
  for (auto& f : pending) f.get();
  return results;
}

}  // namespace starmap::detail
