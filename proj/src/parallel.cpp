#include "ptchain/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ptchain::par {

int max_threads() {
  static const int cached = [] {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != nullptr && *end == '\0' && v >= 1) {
        n = static_cast<int>(std::min<long>(n, v));
      }
    }
    return std::max(n, 1);
  }();
  return cached;
}

void run_indexed(std::int64_t n, bool parallel,
                 const std::function<void(std::int64_t)>& body) {
  if (n <= 0) return;
  const int threads = parallel ? max_threads() : 1;
  if (threads == 1 || n == 1) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }

  std::exception_ptr first_error = nullptr;
  std::mutex error_mutex;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  }
#else
  for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ptchain::par
