#pragma once

#include <cstdint>
#include <functional>

namespace ptchain::par {

/// Worker cap used by all OpenMP kernels: the smaller of the OpenMP default
/// and the THREADS environment variable (when set to a positive integer).
/// Non-numeric or non-positive THREADS values are ignored.
int max_threads();

/// Runs body(i) for i in [0, n). Every index writes only its own output
/// slot, so the parallel and serial paths produce bit-identical results;
/// tests rely on that. An exception thrown by any item is rethrown on the
/// calling thread after the loop joins.
void run_indexed(std::int64_t n, bool parallel,
                 const std::function<void(std::int64_t)>& body);

inline void parallel_for(std::int64_t n,
                         const std::function<void(std::int64_t)>& body) {
  run_indexed(n, true, body);
}

/// Serial reference path, kept separate so tests and the benchmark can
/// compare it against the OpenMP path.
inline void serial_for(std::int64_t n,
                       const std::function<void(std::int64_t)>& body) {
  run_indexed(n, false, body);
}

}  // namespace ptchain::par
