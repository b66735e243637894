#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <numeric>
#include <thread>
#include <vector>

namespace ranklab::detail {

// Runs task(k) for k in [0, count) on up to `workers` threads and returns
// the results in task order.
template <class Result, class Task>
std::vector<Result> run_tasks(std::size_t count, unsigned workers, Task task) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  auto run_one = [&](std::size_t k) {
    try {
      results[k] = task(k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(workers, 1U), count);
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) run_one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < count; k = next++) run_one(k);
      });
    }
  }
  // Same error as a serial run would raise first.
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

// Calls visit(acc, ranking) for every permutation of 0..n-1, in
// lexicographic order within each shard. Shard k holds the rankings that
// start with k; shard accumulators are merged in shard order.
template <class Acc, class MakeAcc, class Visit>
Acc for_each_ranking(std::size_t n, unsigned workers, MakeAcc make_acc, Visit visit) {
  if (n == 0) {
    Acc acc = make_acc();
    const std::vector<std::uint8_t> empty;
    visit(acc, empty);
    return acc;
  }
  auto shards = run_tasks<Acc>(n, workers, [&](std::size_t first) {
    Acc acc = make_acc();
    std::vector<std::uint8_t> ranking(n);
    std::iota(ranking.begin(), ranking.end(), std::uint8_t{0});
    std::rotate(ranking.begin(), ranking.begin() + static_cast<std::ptrdiff_t>(first),
                ranking.begin() + static_cast<std::ptrdiff_t>(first) + 1);
    do {
      visit(acc, ranking);
    } while (std::next_permutation(ranking.begin() + 1, ranking.end()));
    return acc;
  });
  Acc total = std::move(shards.front());
  for (std::size_t k = 1; k < shards.size(); ++k) total.merge(shards[k]);
  return total;
}

}  // namespace ranklab::detail
