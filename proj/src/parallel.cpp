#include "qcap/parallel.hpp"

#include <cstdlib>
#include <thread>

namespace qcap {

int thread_budget() {
  static const int budget = [] {
    int autodetect = static_cast<int>(std::thread::hardware_concurrency());
#ifdef _OPENMP
    autodetect = omp_get_max_threads();
#endif
    if (autodetect < 1) autodetect = 1;
    const char* env = std::getenv("QCAP_THREADS");
    if (!env || !*env) return autodetect;
    const long v = std::strtol(env, nullptr, 10);
    if (v <= 0) return autodetect;
    return static_cast<int>(v);
  }();
  return budget;
}

}  // namespace qcap
