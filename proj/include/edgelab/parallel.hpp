#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

#include "edgelab/common.hpp"

namespace edgelab {

/// Outcome of one Monte Carlo work unit: a value, or the error kind that
/// aborted it.
template <typename R>
struct Outcome {
  std::optional<R> value;
  std::optional<Error::Kind> error;
};

/// Evaluates fn(i) for i in [0, count) on `threads` workers pulling indices
/// from a shared counter. Results come back in index order, so any reduction
/// over them is independent of scheduling. Library errors are captured per
/// index; anything else propagates.
template <typename R, typename Fn>
std::vector<Outcome<R>> parallel_map(std::size_t count, int threads, Fn&& fn) {
  std::vector<Outcome<R>> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr fatal;
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || stop.load()) return;
      try {
        out[i].value = fn(i);
      } catch (const Error& e) {
        out[i].error = e.kind();
      } catch (...) {
        if (!stop.exchange(true)) fatal = std::current_exception();
        return;
      }
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (fatal) std::rethrow_exception(fatal);
  return out;
}

}  // namespace edgelab
