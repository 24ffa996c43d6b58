#include "ptchain/lattice.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptchain {

namespace {

void fill_chain_hoppings(ComplexMatrix& h, double j) {
  const int n = static_cast<int>(h.rows());
  for (int i = 0; i + 1 < n; ++i) {
    h(i, i + 1) = -j;
    h(i + 1, i) = -j;
  }
}

std::vector<int> iota_labels(int first, int count, int step = 1) {
  std::vector<int> labels(count);
  for (int i = 0; i < count; ++i) labels[i] = first + i * step;
  return labels;
}

}  // namespace

SubNetwork SubNetwork::empty() { return SubNetwork{ComplexMatrix::Zero(0, 0)}; }

SubNetwork SubNetwork::uniform_chain(int ns, double j) {
  if (ns < 0) throw std::invalid_argument("sub-network size must be >= 0");
  ComplexMatrix kappa = ComplexMatrix::Zero(ns, ns);
  fill_chain_hoppings(kappa, j);
  return SubNetwork{std::move(kappa)};
}

bool SubNetwork::is_uniform_chain(double j, double tol) const {
  const ComplexMatrix ref = uniform_chain(size(), j).kappa;
  return (kappa - ref).cwiseAbs().maxCoeff() <= tol || size() == 0;
}

void SubNetwork::validate() const {
  if (kappa.rows() != kappa.cols()) {
    throw std::invalid_argument("sub-network coupling matrix must be square");
  }
  if (kappa.size() > 0 &&
      (kappa - kappa.adjoint()).cwiseAbs().maxCoeff() > 1e-14) {
    throw std::invalid_argument("sub-network coupling matrix must be Hermitian");
  }
}

LatticeSpec LatticeSpec::uniform(int n, int ns, double gamma, double j) {
  LatticeSpec spec;
  spec.separation = n;
  spec.sub = SubNetwork::uniform_chain(ns, j);
  spec.hopping = j;
  spec.gamma = gamma;
  spec.sub_coupling = j;
  spec.validate();
  return spec;
}

void LatticeSpec::validate() const {
  sub.validate();
  if (separation < 1) throw std::invalid_argument("separation N must be >= 1");
  if (!(hopping > 0.0)) throw std::invalid_argument("hopping J must be > 0");
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
  if (!std::isfinite(hopping) || !std::isfinite(gamma) ||
      !std::isfinite(sub_coupling)) {
    throw std::invalid_argument("lattice parameters must be finite");
  }
  if (total_sites() < 2) {
    throw std::invalid_argument("total site count N + 2*Ns must be >= 2");
  }
}

bool HamiltonianMatrix::is_hermitian(double tol) const {
  if (entries.size() == 0) return true;
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

HamiltonianMatrix build_pt_chain(const LatticeSpec& spec) {
  spec.validate();
  if (spec.sub_size() > 0 && !spec.sub.is_uniform_chain(spec.hopping)) {
    throw std::invalid_argument(
        "build_pt_chain requires a uniform-chain sub-network with the chain "
        "hopping; general couplings apply to the device builders only");
  }
  const int l = spec.total_sites();
  const int ns = spec.sub_size();
  ComplexMatrix h = ComplexMatrix::Zero(l, l);
  fill_chain_hoppings(h, spec.hopping);

  const Complex gain = spec.swap_gain_loss ? -kImag * spec.gamma
                                           : kImag * spec.gamma;
  // += so the degenerate N=1 case (both potentials on one site) cancels.
  h(ns, ns) += gain;
  h(spec.separation + ns - 1, spec.separation + ns - 1) += -gain;

  return HamiltonianMatrix{std::move(h), iota_labels(1, l)};
}

HamiltonianMatrix build_device_with_drain(const LatticeSpec& spec, Side side,
                                          ImagKind kind) {
  spec.validate();
  const int ns = spec.sub_size();
  const double g = spec.sub_coupling;
  const Complex pot = (kind == ImagKind::Drain ? -kImag : kImag) * spec.gamma;

  switch (side) {
    case Side::Left: {
      ComplexMatrix h = ComplexMatrix::Zero(ns + 1, ns + 1);
      h(0, 0) = pot;
      h.block(1, 1, ns, ns) = spec.sub.kappa;
      if (ns > 0) {
        h(0, 1) = -g;
        h(1, 0) = -g;
      }
      return HamiltonianMatrix{std::move(h), iota_labels(0, ns + 1)};
    }
    case Side::Right: {
      ComplexMatrix h = ComplexMatrix::Zero(ns + 1, ns + 1);
      // Mirror image of the Left device: sub-network site order reversed.
      for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j)
          h(i, j) = spec.sub.kappa(ns - 1 - i, ns - 1 - j);
      h(ns, ns) = pot;
      if (ns > 0) {
        h(ns - 1, ns) = -g;
        h(ns, ns - 1) = -g;
      }
      std::vector<int> labels = iota_labels(ns, ns, -1);
      labels.push_back(0);
      return HamiltonianMatrix{std::move(h), std::move(labels)};
    }
    case Side::Both: {
      ComplexMatrix h = ComplexMatrix::Zero(ns + 2, ns + 2);
      h(0, 0) = pot;
      h(ns + 1, ns + 1) = -pot;
      h.block(1, 1, ns, ns) = spec.sub.kappa;
      if (ns > 0) {
        h(0, 1) = -g;
        h(1, 0) = -g;
        h(ns, ns + 1) = -g;
        h(ns + 1, ns) = -g;
      } else {
        h(0, 1) = -g;
        h(1, 0) = -g;
      }
      return HamiltonianMatrix{std::move(h), iota_labels(0, ns + 2)};
    }
  }
  throw std::invalid_argument("unknown device side");
}

HamiltonianMatrix build_hermitian_device(const LatticeSpec& spec, double v,
                                         Side side) {
  spec.validate();
  if (!std::isfinite(v)) throw std::invalid_argument("potential V must be finite");
  const int ns = spec.sub_size();

  if (side == Side::Both) {
    if (ns > 0 && !spec.sub.is_uniform_chain(spec.hopping)) {
      throw std::invalid_argument(
          "the two-potential device region requires a uniform-chain "
          "sub-network");
    }
    const int l = spec.total_sites();
    ComplexMatrix h = ComplexMatrix::Zero(l, l);
    fill_chain_hoppings(h, spec.hopping);
    h(ns, ns) += v;
    h(spec.separation + ns - 1, spec.separation + ns - 1) += v;
    return HamiltonianMatrix{std::move(h), iota_labels(1, l)};
  }

  LatticeSpec real_spec = spec;
  real_spec.gamma = 0.0;
  HamiltonianMatrix device = build_device_with_drain(real_spec, side);
  const int pot_index = (side == Side::Left) ? 0 : ns;
  device.entries(pot_index, pot_index) = v;
  return device;
}

}  // namespace ptchain
