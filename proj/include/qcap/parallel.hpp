#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcap {

/// Serial is the reference path; Parallel runs the same loop body under
/// OpenMP. Results are identical by construction: every kernel writes
/// per-index slots and reduces serially afterwards.
enum class ExecPolicy { Serial, Parallel };

/// Thread cap from QCAP_THREADS (0 or unset = auto). Always >= 1.
int thread_budget();

template <typename F>
void parallel_for(ExecPolicy policy, std::int64_t n, F&& body) {
#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel && thread_budget() > 1) {
#pragma omp parallel for schedule(static) num_threads(thread_budget())
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#endif
  (void)policy;
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace qcap
