#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace polyrad {

/// Worker cap: POLYRAD_THREADS if set and positive, else hardware threads.
int worker_count();

namespace detail {
bool &inside_worker();
} // namespace detail

/// Evaluates fn(0..n-1) and returns the results in index order, so any
/// reduction over the result is independent of scheduling. Calls made from
/// inside a worker run serially.
template <class Fn>
auto parallel_map(std::size_t n, Fn &&fn)
    -> std::vector<std::invoke_result_t<Fn &, std::size_t>> {
  using R = std::invoke_result_t<Fn &, std::size_t>;
  std::vector<R> out(n);
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(worker_count()));
  if (workers <= 1 || detail::inside_worker()) {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto run = [&] {
    detail::inside_worker() = true;
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    detail::inside_worker() = false;
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(run);
  }
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

} // namespace polyrad
