#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sphrect {

enum class ExecMode { Serial, Parallel };

// Data-parallel index loop. The Serial path is the reference implementation;
// the Parallel path must produce bit-identical per-index results (callers
// write into preallocated slots, never into shared accumulators).
template <typename Fn>
void parallel_for(std::size_t n, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long idx = 0; idx < static_cast<long long>(n); ++idx)
      fn(static_cast<std::size_t>(idx));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t idx = 0; idx < n; ++idx) fn(idx);
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sphrect
