#pragma once

#include <utility>
#include <vector>

#include "ptchain/common.hpp"
#include "ptchain/lattice.hpp"

namespace ptchain {

/// Real quasi-momentum solution of the quantization equation for the
/// balanced chain, with its band energy and the interference kernel
/// chi = sin(k (Ns+1)) / sin(k).
struct BetheRoot {
  double k = 0.0;        // in (0, pi)
  double energy = 0.0;   // -2 J cos k
  Complex chi{0.0, 0.0};
  double residual = 0.0; // |quantization defect| at k
  bool double_root = false;  // found as a touching zero, not a sign change
};

/// Amplitudes of the three-region plane-wave ansatz
///   c_left  e^{ikj} + d_left  e^{-ikj}   on [1, Ns+1]
///   a       e^{ikj} + b       e^{-ikj}   on [Ns+1, Ns+N]
///   c_right e^{ikj} + d_right e^{-ikj}   on [Ns+N, N+2Ns].
struct PlaneWaveCoeffs {
  Complex a, b, c_left, d_left, c_right, d_right;
};

/// Quantization defect
///   gamma^2 sin^2[k(Ns+1)] sin[k(1-N)] - J^2 sin^2(k) sin[k(N+2Ns+1)].
/// Real-valued for real k; wrapped as complex for interface uniformity.
/// Requires a uniform-chain spec with N >= 2 and k strictly inside (0, pi).
Complex quantization_residual(double k, const LatticeSpec& spec);

struct RootScanOptions {
  int grid_points_per_mode = 20;  // grid size = this * (N + 2Ns + 1)
  double edge_margin = 1e-6;      // scan (margin, pi - margin)
  double k_tolerance = 1e-13;     // bisection bracket width target
  double dedupe_tolerance = 1e-9;
  /// When set, fewer than N-1 roots raises NumericalError. The N-1 floor
  /// does not survive strong symmetry breaking (small chains with large
  /// gamma have fully complex spectra), so callers probing that regime
  /// disable the check and count whatever is there.
  bool enforce_min_count = true;
  bool parallel = true;
};

/// All real roots in (0, pi), ascending. Sign changes on an oversampled
/// grid are refined by bisection; touching zeros are caught by a local
/// |residual| minimization and kept only when the defect is < 1e-12.
std::vector<BetheRoot> find_real_roots(const LatticeSpec& spec,
                                       const RootScanOptions& options = {});

/// Reconstructs the eigenvector for a root by extracting the null direction
/// of the 6x6 matching system (two hard-wall closures, two continuity
/// conditions, the two potential-site equations). Returns the amplitudes
/// and the unit-norm site-space vector on sites 1..N+2Ns. Throws
/// NumericalError when the null space is empty (inconsistent root) or has
/// dimension >= 2 (degenerate root).
std::pair<PlaneWaveCoeffs, ComplexVector> eigenfunction_from_root(
    const BetheRoot& root, const LatticeSpec& spec);

}  // namespace ptchain
