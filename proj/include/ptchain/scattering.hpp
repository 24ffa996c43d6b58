#pragma once

#include <optional>

#include "ptchain/common.hpp"
#include "ptchain/lattice.hpp"

namespace ptchain {

/// Exact closure of a semi-infinite uniform chain at a given in-band energy:
/// k = arccos(-E / 2J), surface self-energy sigma = -J e^{ik} (retarded,
/// Im sigma < 0 inside the band), Omega = sqrt(4 J^2 - E^2) = 2 J sin k.
struct LeadClosure {
  double energy = 0.0;
  double k = 0.0;
  Complex sigma{0.0, 0.0};
  double omega = 0.0;
};

/// Throws std::domain_error for |E| >= 2J (band edge or out of band).
LeadClosure lead_closure(double energy, double j);

struct ScatteringSolution {
  Complex r{0.0, 0.0};            // reflection amplitude in the incident lead
  std::optional<Complex> t;       // transmission amplitude (two-lead only)
  ComplexVector psi_device;       // wave function on the device sites
  std::optional<Complex> xi;      // kernel of the closed form, when it applies
};

/// Scattering of a unit incident wave e^{ikj} off a finite device closed by
/// one semi-infinite lead. Phase convention: the lead occupies j <= -1, the
/// incident wave is e^{ikj}, and with coupling == J the plane-wave form
/// extends to the attach site so psi(attach) = 1 + r. For a general
/// lead-device coupling c the closure is (c^2/J^2) sigma, the source is
/// 2 i c sin k, and r = (c/J) psi(attach) - 1.
ScatteringSolution solve_one_lead(const HamiltonianMatrix& device,
                                  int attach_index, double k, double j,
                                  std::optional<double> coupling = {});

/// Two self-energy closures, incident wave entering through the left lead,
/// transmission amplitude read out of the right one: t = (c_r/J) psi(right).
/// left_index == right_index is legal (two leads on one site).
ScatteringSolution solve_two_lead(const HamiltonianMatrix& device,
                                  int left_index, int right_index,
                                  double left_coupling, double right_coupling,
                                  double k, double j);

/// Closed-form reflection amplitude of the two-potential region with leads
/// of coupling nu on both potential sites:
///   xi = V/J + sin(kN)/sin(k(N-1)) - (nu^2/J^2) e^{ik}
///        - sin(k Ns)/sin(k(Ns+1))
///   r  = 2 i nu^2 xi sin(k) sin^2(k(N-1))
///        / (J^2 sin^2(k) - J^2 xi^2 sin^2(k(N-1)))  - 1.
/// Fills r and xi only. Throws std::domain_error near the kinematic poles
/// (|sin(k(N-1))| or |sin(k(Ns+1))| below 1e-12).
ScatteringSolution closed_form_r(double k, int n, int ns, double v, double nu,
                                 double j);

/// Defect of the zero-reflection condition
///   2 i nu^2 xi sin(k) sin^2(k(N-1)) - (J^2 sin^2(k) - J^2 xi^2
///   sin^2(k(N-1)));
/// vanishes exactly where closed_form_r gives r = 0.
Complex resonance_residual(double k, int n, int ns, double v, double nu,
                           double j);

}  // namespace ptchain
