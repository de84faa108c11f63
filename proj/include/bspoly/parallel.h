#ifndef BSPOLY_PARALLEL_H_
#define BSPOLY_PARALLEL_H_

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>

namespace bspoly {

// Worker count for parallel scans: BSPOLY_THREADS when set to a positive
// integer, otherwise the OpenMP default.
int ThreadLimit();

// Smallest i in [0, n) with fails(i), or nullopt. Indices are evaluated in
// parallel, but the answer always equals the sequential scan's. Indices above
// the best failure found so far are skipped. An exception is rethrown only if
// the sequential scan would have reached it.
template <class Pred>
std::optional<std::size_t> FirstFailure(std::size_t n, Pred&& fails) {
  std::atomic<std::size_t> best{n};
  std::exception_ptr error;
  std::size_t error_index = n;
  std::mutex error_mutex;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8) num_threads(ThreadLimit())
  for (long k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (fails(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (i < error_index) {
        error = std::current_exception();
        error_index = i;
      }
    }
  }
  if (error && error_index < best.load()) std::rethrow_exception(error);
  if (best.load() == n) return std::nullopt;
  return best.load();
}

}  // namespace bspoly

#endif  // BSPOLY_PARALLEL_H_
