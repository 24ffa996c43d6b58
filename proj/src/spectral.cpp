#include "ptchain/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace ptchain {

EigenSystem dense_eigensystem(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("eigendecomposition needs a square matrix, dim >= 1");
  }
  const lapack_int n = static_cast<lapack_int>(m.rows());
  ComplexMatrix a = m;  // zgeev overwrites its input
  ComplexVector values(n);
  ComplexMatrix vectors(n, n);
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'V', n, a.data(), n, values.data(), nullptr, 1,
      vectors.data(), n);
  if (info != 0) {
    std::ostringstream msg;
    msg << "dense eigensolver failed to converge (zgeev info=" << info << ")";
    throw NumericalError(msg.str());
  }
  return EigenSystem{std::move(values), std::move(vectors)};
}

namespace {

/// Rotate so the largest-magnitude entry is real positive; ties go to the
/// lowest index. Keeps reported eigenvectors reproducible.
void fix_phase(ComplexVector& v) {
  int arg_max = 0;
  double best = -1.0;
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best) {
      best = a;
      arg_max = i;
    }
  }
  if (best <= 0.0) return;
  v *= std::conj(v[arg_max]) / best;
}

}  // namespace

SpectrumReport eigenpairs(const HamiltonianMatrix& h) {
  const EigenSystem sys = dense_eigensystem(h.entries);
  const int n = h.dim();
  const double h_max = h.entries.cwiseAbs().maxCoeff();
  const double residual_bound = 1e-9 * std::max(h_max, 1e-300) * n;

  SpectrumReport report;
  report.pairs.resize(n);
  for (int i = 0; i < n; ++i) {
    EigenPair& pair = report.pairs[i];
    pair.energy = sys.values[i];
    pair.vector = sys.vectors.col(i).normalized();
    fix_phase(pair.vector);
    pair.is_real = std::abs(pair.energy.imag()) <
                   kRealEnergyTol * std::max(1.0, std::abs(pair.energy));

    const double residual =
        (h.entries * pair.vector - pair.energy * pair.vector).norm();
    if (residual > residual_bound) {
      std::ostringstream msg;
      msg << "eigenpair residual " << residual << " exceeds bound "
          << residual_bound;
      throw NumericalError(msg.str());
    }
  }

  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const EigenPair& a, const EigenPair& b) {
              if (a.energy.real() != b.energy.real())
                return a.energy.real() < b.energy.real();
              return a.energy.imag() < b.energy.imag();
            });

  report.n_real = 0;
  bool all_symmetric = true;
  for (const EigenPair& pair : report.pairs) {
    if (pair.is_real) ++report.n_real;
    if (pt_symmetry_residual(pair.vector) >= kPtSymmetryTol)
      all_symmetric = false;
  }
  report.pt_unbroken = (report.n_real == n) && all_symmetric;
  return report;
}

ComplexVector pt_apply(const ComplexVector& psi) {
  return psi.conjugate().reverse();
}

double pt_symmetry_residual(const ComplexVector& psi) {
  const double norm2 = psi.squaredNorm();
  if (norm2 <= 0.0) return 0.0;
  // ||PT psi - e^{i theta} psi||^2 = 2 - 2 Re(e^{-i theta} <psi, PT psi>)
  // minimized at theta = arg <psi, PT psi>.
  const Complex overlap = psi.dot(pt_apply(psi)) / norm2;
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(overlap)));
}

}  // namespace ptchain
