// Deterministic parallelism helpers: work is split into chunks whose count
// and boundaries do not depend on the thread count, and reductions happen
// in chunk-index order, so results are bit-identical for any --threads.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qwhit {

/// Global worker count; 0 (default) means hardware concurrency.
void set_thread_count(int n);
int thread_count();

/// Runs f(i) for i in [0, n) on worker threads (atomic index pull).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

/// Evaluates f(i) into a vector; callers reduce the vector serially in
/// index order to stay deterministic.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F f) {
  std::vector<R> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace qwhit
