#pragma once

#include <vector>

#include "ptchain/common.hpp"
#include "ptchain/lattice.hpp"

namespace ptchain {

/// |Im e| < kRealEnergyTol * max(1, |e|) classifies an eigenvalue as real:
/// relative near the band edges, absolute near zero.
inline constexpr double kRealEnergyTol = 1e-9;

/// Threshold on the phase-optimal symmetry residual below which an
/// eigenvector counts as reversal-conjugation symmetric.
inline constexpr double kPtSymmetryTol = 1e-7;

struct EigenPair {
  Complex energy;
  ComplexVector vector;  // unit norm, largest-magnitude entry real positive
  bool is_real = false;
};

struct SpectrumReport {
  std::vector<EigenPair> pairs;  // sorted by (Re e, Im e)
  int n_real = 0;
  bool pt_unbroken = false;  // all real and all vectors PT-symmetric
};

/// Raw dense eigendecomposition (LAPACK zgeev). Columns of `vectors` are the
/// right eigenvectors for `values`. Throws NumericalError on non-convergence.
struct EigenSystem {
  ComplexVector values;
  ComplexMatrix vectors;
};
EigenSystem dense_eigensystem(const ComplexMatrix& m);

/// Full decomposition with classification, normalization, deterministic
/// phase fixing and sorting. Enforces the eigenpair residual bound
/// ||H psi - e psi|| < 1e-9 * max|H| * dim.
SpectrumReport eigenpairs(const HamiltonianMatrix& h);

/// Combined reversal + complex conjugation of a site-indexed vector.
ComplexVector pt_apply(const ComplexVector& psi);

/// min over phases theta of ||pt_apply(psi) - e^{i theta} psi||_2 for the
/// normalized vector; 0 for a symmetric state, up to sqrt(2) for a fully
/// asymmetric one.
double pt_symmetry_residual(const ComplexVector& psi);

}  // namespace ptchain
