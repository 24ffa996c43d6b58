#pragma once

#include <complex>

#include <doctest.h>

#include "ptchain/common.hpp"

namespace testutil {

inline void check_close(std::complex<double> actual,
                        std::complex<double> expected, double tol) {
  CAPTURE(actual);
  CAPTURE(expected);
  CHECK(std::abs(actual - expected) <= tol);
}

inline double phase_free_distance(const ptchain::ComplexVector& a,
                                  const ptchain::ComplexVector& b) {
  // min over unit phases of ||a - e^{i theta} b|| for unit vectors.
  const std::complex<double> overlap = b.dot(a);
  const double mag = std::abs(overlap);
  if (mag == 0.0) return std::sqrt(a.squaredNorm() + b.squaredNorm());
  const std::complex<double> phase = overlap / mag;
  return (a - phase * b).norm();
}

}  // namespace testutil
