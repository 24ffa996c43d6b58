#pragma once

#include <string>
#include <vector>

#include "ptchain/bethe.hpp"
#include "ptchain/common.hpp"
#include "ptchain/lattice.hpp"

namespace ptchain {

/// Lead coupling and real potential that make the extra lead reproduce the
/// imaginary potential at quasi-momentum k:
///   nu^2 sin k = gamma J,   nu^2 cos k = V J
/// or equivalently, with E = -2J cos k and Omega = sqrt(4J^2 - E^2),
///   nu^2 = 2 gamma J^2 / Omega,   V = -gamma E / Omega.
struct CounterpartParams {
  double nu = 0.0;
  double v = 0.0;
  double k = 0.0;
  double gamma = 0.0;
  double j = 1.0;
  double omega = 0.0;
};

/// Throws std::domain_error at the band edges (Omega -> 0). The positive
/// nu root is chosen; nu -> -nu is a gauge change on the lead sites.
CounterpartParams map_to_counterpart(double k, double gamma, double j);

struct CorrespondenceReport {
  BetheRoot root;
  CounterpartParams params;
  double r_abs = 0.0;
  double t_abs = 0.0;
  double align_residual = 0.0;
  Complex scalar{0.0, 0.0};  // least-squares c in psi_pt ~ c * psi_scatter
  bool vacuous = false;      // gamma = 0: leads detach, nothing to verify
};

/// End-to-end check for one real root: maps (nu, V), scatters through the
/// two-potential device at the root momentum, reconstructs the chain
/// eigenvector, and aligns the two on the common region. Throws
/// NumericalError when the alignment residual reaches 1e-6.
CorrespondenceReport verify_root(const LatticeSpec& spec,
                                 const BetheRoot& root);

struct SweepRow {
  int n = 0;
  int ns = 0;
  double gamma = 0.0;
  double j = 1.0;
  CorrespondenceReport report;
};

struct SweepResult {
  std::vector<SweepRow> rows;        // deterministic order: spec, then k
  std::vector<std::string> errors;   // per-item failures, sweep continues
  int n_pass = 0;
  int n_fail = 0;
};

/// verify_root over every real root of every spec. Root finding runs with
/// the minimum-count tripwire disabled: a partially broken spectrum is a
/// legitimate input here and the check is per existing root.
SweepResult sweep(const std::vector<LatticeSpec>& grid, bool parallel = true);
SweepResult sweep_serial(const std::vector<LatticeSpec>& grid);

}  // namespace ptchain
