#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gls {

// Data-parallel loop over [0, n).  The body must only write to its own slot;
// results are then deterministic regardless of thread count.  With
// parallel=false (the serial reference used by the equality tests and the
// comparison benchmark) this is a plain loop.
template <typename Body>
void parallel_for(std::size_t n, bool parallel, const Body& body) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gls
