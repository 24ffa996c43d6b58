#include "ptchain/scattering.hpp"

#include <cmath>
#include <sstream>

namespace ptchain {

namespace {

void require_in_band_k(double k) {
  if (!(k > 0.0) || !(k < kPi)) {
    throw std::domain_error("quasi-momentum k must lie strictly inside (0, pi)");
  }
}

void require_positive_hopping(double j) {
  if (!(j > 0.0)) throw std::invalid_argument("lead hopping J must be > 0");
}

ComplexVector solve_device_system(ComplexMatrix a, ComplexVector b) {
  const Eigen::FullPivLU<ComplexMatrix> lu(a);
  if (!lu.isInvertible()) {
    throw NumericalError(
        "scattering system is singular: the energy collides with a true "
        "bound state of the closed device");
  }
  return lu.solve(b);
}

}  // namespace

LeadClosure lead_closure(double energy, double j) {
  require_positive_hopping(j);
  if (!(std::abs(energy) < 2.0 * j)) {
    throw std::domain_error(
        "energy outside the open band (-2J, 2J); the lead closure is "
        "singular at the band edge");
  }
  LeadClosure closure;
  closure.energy = energy;
  closure.k = std::acos(-energy / (2.0 * j));
  closure.sigma = -j * std::exp(kImag * closure.k);
  closure.omega = std::sqrt(4.0 * j * j - energy * energy);
  return closure;
}

ScatteringSolution solve_one_lead(const HamiltonianMatrix& device,
                                  int attach_index, double k, double j,
                                  std::optional<double> coupling) {
  require_in_band_k(k);
  require_positive_hopping(j);
  const int dim = device.dim();
  if (attach_index < 0 || attach_index >= dim) {
    throw std::invalid_argument("attach index outside the device");
  }
  const double c = coupling.value_or(j);
  const double energy = -2.0 * j * std::cos(k);
  const Complex sigma = -j * std::exp(kImag * k);

  ComplexMatrix a = -device.entries;
  a.diagonal().array() += energy;
  a(attach_index, attach_index) -= (c * c / (j * j)) * sigma;
  ComplexVector b = ComplexVector::Zero(dim);
  b(attach_index) = 2.0 * kImag * c * std::sin(k);

  ScatteringSolution sol;
  sol.psi_device = solve_device_system(std::move(a), std::move(b));
  sol.r = (c / j) * sol.psi_device(attach_index) - 1.0;
  return sol;
}

ScatteringSolution solve_two_lead(const HamiltonianMatrix& device,
                                  int left_index, int right_index,
                                  double left_coupling, double right_coupling,
                                  double k, double j) {
  require_in_band_k(k);
  require_positive_hopping(j);
  const int dim = device.dim();
  if (left_index < 0 || left_index >= dim || right_index < 0 ||
      right_index >= dim) {
    throw std::invalid_argument("attach index outside the device");
  }
  const double energy = -2.0 * j * std::cos(k);
  const Complex sigma = -j * std::exp(kImag * k);

  ComplexMatrix a = -device.entries;
  a.diagonal().array() += energy;
  a(left_index, left_index) -=
      (left_coupling * left_coupling / (j * j)) * sigma;
  a(right_index, right_index) -=
      (right_coupling * right_coupling / (j * j)) * sigma;
  ComplexVector b = ComplexVector::Zero(dim);
  b(left_index) = 2.0 * kImag * left_coupling * std::sin(k);

  ScatteringSolution sol;
  sol.psi_device = solve_device_system(std::move(a), std::move(b));
  sol.r = (left_coupling / j) * sol.psi_device(left_index) - 1.0;
  sol.t = (right_coupling / j) * sol.psi_device(right_index);
  return sol;
}

namespace {

Complex xi_kernel(double k, int n, int ns, double v, double nu, double j) {
  const double sin_sep = std::sin(k * (n - 1));
  const double sin_sub = std::sin(k * (ns + 1));
  if (std::abs(sin_sep) < 1e-12 || std::abs(sin_sub) < 1e-12) {
    throw std::domain_error(
        "k sits on a kinematic pole of the closed form "
        "(sin(k(N-1)) or sin(k(Ns+1)) vanishes)");
  }
  return v / j + std::sin(k * n) / sin_sep -
         (nu * nu / (j * j)) * std::exp(kImag * k) -
         std::sin(k * ns) / sin_sub;
}

void require_closed_form_inputs(double k, int n, int ns, double j) {
  require_in_band_k(k);
  require_positive_hopping(j);
  if (n < 2) throw std::invalid_argument("closed form needs N >= 2");
  if (ns < 0) throw std::invalid_argument("Ns must be >= 0");
}

}  // namespace

ScatteringSolution closed_form_r(double k, int n, int ns, double v, double nu,
                                 double j) {
  require_closed_form_inputs(k, n, ns, j);
  const Complex xi = xi_kernel(k, n, ns, v, nu, j);
  const double sk = std::sin(k);
  const double s_sep = std::sin(k * (n - 1));
  const Complex denom = j * j * sk * sk - j * j * xi * xi * s_sep * s_sep;
  if (std::abs(denom) == 0.0) {
    throw NumericalError("closed-form reflection has a pole at this k");
  }
  ScatteringSolution sol;
  sol.xi = xi;
  sol.r = 2.0 * kImag * nu * nu * xi * sk * s_sep * s_sep / denom - 1.0;
  return sol;
}

Complex resonance_residual(double k, int n, int ns, double v, double nu,
                           double j) {
  require_closed_form_inputs(k, n, ns, j);
  const Complex xi = xi_kernel(k, n, ns, v, nu, j);
  const double sk = std::sin(k);
  const double s_sep = std::sin(k * (n - 1));
  return 2.0 * kImag * nu * nu * xi * sk * s_sep * s_sep -
         (j * j * sk * sk - j * j * xi * xi * s_sep * s_sep);
}

}  // namespace ptchain
