#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace scp::detail {

// Finds the smallest index i with eval(candidates[i]) successful. Success is
// not assumed monotone in the candidate value, so candidates are claimed in
// ascending order; a worker stops once every unclaimed index exceeds the
// best success so far. The reported minimum is schedule-independent.
template <typename Result>
std::pair<std::size_t, Result> scan_candidates(
    const std::vector<double>& candidates, int threads,
    const std::function<std::optional<Result>(double)>& eval) {
  const std::size_t count = candidates.size();
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto res = eval(candidates[i])) return {i, std::move(*res)};
    }
    return {count, Result{}};
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex result_mutex;
  Result best_result{};

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      auto res = eval(candidates[i]);
      if (!res) continue;
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
      if (i <= best.load()) {
        std::lock_guard<std::mutex> lock(result_mutex);
        if (i == best.load()) best_result = std::move(*res);
      }
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::size_t found = best.load();
  if (found < count) {
    // Re-evaluate at the winning candidate: cheap, and guarantees the stored
    // result matches the minimum index regardless of update interleaving.
    auto res = eval(candidates[found]);
    return {found, std::move(*res)};
  }
  return {count, Result{}};
}

}  // namespace scp::detail
