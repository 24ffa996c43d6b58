#include "ptchain/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "ptchain/correspondence.hpp"
#include "ptchain/parallel.hpp"
#include "ptchain/spectral.hpp"

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace ptchain {

ComplexVector make_packet(const WavePacket& packet, int n_sites) {
  if (n_sites < 1) throw std::invalid_argument("packet needs a chain to live on");
  if (!(packet.width > 0.0)) {
    throw std::invalid_argument("packet width sigma must be > 0");
  }
  if (!(packet.momentum > 0.0) || !(packet.momentum < kPi)) {
    throw std::domain_error("packet momentum must lie strictly inside (0, pi)");
  }
  const double x0 = packet.center;
  const double sigma = packet.width;
  const auto envelope = [&](double x) {
    const double d = (x - x0) / sigma;
    return std::exp(-0.5 * d * d);
  };

  ComplexVector psi(n_sites);
  double inside = 0.0;
  for (int site = 0; site < n_sites; ++site) {
    const double g = envelope(site);
    psi(site) = g * std::exp(kImag * (packet.momentum * site));
    inside += g * g;
  }
  // Mass the envelope would carry beyond the chain boundaries.
  double outside = 0.0;
  const int reach = static_cast<int>(std::ceil(12.0 * sigma));
  for (int d = 1; d <= reach; ++d) {
    const double left = envelope(-d);
    const double right = envelope(n_sites - 1 + d);
    outside += left * left + right * right;
  }
  if (outside > 1e-10 * (inside + outside)) {
    std::ostringstream msg;
    msg << "packet tail mass " << outside / (inside + outside)
        << " spills over the chain boundaries (limit 1e-10)";
    throw std::invalid_argument(msg.str());
  }
  psi.normalize();
  return psi;
}

namespace {

struct Decomposition {
  ComplexVector values;
  ComplexMatrix vectors;
  ComplexVector projected;  // V^{-1} psi0
};

Decomposition decompose_real_symmetric(const RealMatrix& h,
                                       const ComplexVector& psi0) {
  const lapack_int n = static_cast<lapack_int>(h.rows());
  RealMatrix vectors = h;
  RealVector values(n);
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                         vectors.data(), n, values.data());
  if (info != 0) {
    throw NumericalError("symmetric eigensolver failed (dsyevd info=" +
                         std::to_string(info) + ")");
  }
  Decomposition d;
  d.values = values.cast<Complex>();
  d.vectors = vectors.cast<Complex>();
  d.projected = vectors.transpose().cast<Complex>() * psi0;
  return d;
}

Decomposition decompose_hermitian(const ComplexMatrix& h,
                                  const ComplexVector& psi0) {
  const lapack_int n = static_cast<lapack_int>(h.rows());
  ComplexMatrix vectors = h;
  RealVector values(n);
  const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                         vectors.data(), n, values.data());
  if (info != 0) {
    throw NumericalError("Hermitian eigensolver failed (zheevd info=" +
                         std::to_string(info) + ")");
  }
  Decomposition d;
  d.values = values.cast<Complex>();
  d.projected = vectors.adjoint() * psi0;
  d.vectors = std::move(vectors);
  return d;
}

Decomposition decompose_general(const ComplexMatrix& h,
                                const ComplexVector& psi0) {
  const EigenSystem sys = dense_eigensystem(h);
  const Eigen::PartialPivLU<ComplexMatrix> lu(sys.vectors);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-12)) {
    std::ostringstream msg;
    msg << "eigenvector matrix condition estimate " << 1.0 / rcond
        << " exceeds 1e12: exceptional-point proximity, the propagator is "
           "not diagonalizable here";
    throw NumericalError(msg.str());
  }
  Decomposition d;
  d.values = sys.values;
  d.projected = lu.solve(psi0);
  d.vectors = sys.vectors;
  return d;
}

EvolutionTrace evolve_impl(const HamiltonianMatrix& h,
                           const ComplexVector& psi0,
                           const std::vector<double>& times,
                           const RegionMap& regions, bool parallel) {
  const int n = h.dim();
  if (h.entries.cols() != n || n < 1) {
    throw std::invalid_argument("propagator needs a square matrix");
  }
  if (psi0.size() != n) {
    throw std::invalid_argument("initial state dimension mismatch");
  }
  if (times.empty()) throw std::invalid_argument("no evolution times given");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) ||
        (i > 0 && times[i] < times[i - 1])) {
      throw std::invalid_argument("times must be finite and non-decreasing");
    }
  }
  for (const auto& [name, sites] : regions) {
    for (int site : sites) {
      if (site < 0 || site >= n) {
        throw std::invalid_argument("region '" + name +
                                    "' indexes outside the chain");
      }
    }
  }

  const bool imag_free = h.entries.imag().cwiseAbs().maxCoeff() <= 0.0;
  Decomposition d;
  if (imag_free && h.is_hermitian(1e-12)) {
    d = decompose_real_symmetric(h.entries.real(), psi0);
  } else if (h.is_hermitian(1e-12)) {
    d = decompose_hermitian(h.entries, psi0);
  } else {
    d = decompose_general(h.entries, psi0);
  }

  const std::size_t n_times = times.size();
  EvolutionTrace trace;
  trace.times = times;
  trace.norms.resize(n_times);
  trace.states.resize(n_times);
  for (const auto& [name, sites] : regions) {
    trace.region_masses[name].resize(n_times);
  }

  par::run_indexed(static_cast<std::int64_t>(n_times), parallel,
                   [&](std::int64_t ti) {
    const double t = times[ti];
    ComplexVector phased(n);
    for (int i = 0; i < n; ++i) {
      phased(i) = std::exp(-kImag * (d.values(i) * t)) * d.projected(i);
    }
    ComplexVector psi_t = d.vectors * phased;
    trace.norms[ti] = psi_t.squaredNorm();
    for (const auto& [name, sites] : regions) {
      double mass = 0.0;
      for (int site : sites) mass += std::norm(psi_t(site));
      trace.region_masses.at(name)[ti] = mass;
    }
    trace.states[ti] = std::move(psi_t);
  });
  return trace;
}

ComplexMatrix open_chain(int n, double j) {
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    h(i, i + 1) = -j;
    h(i + 1, i) = -j;
  }
  return h;
}

std::vector<int> index_range(int first, int last) {
  std::vector<int> out;
  for (int i = first; i <= last; ++i) out.push_back(i);
  return out;
}

}  // namespace

EvolutionTrace evolve(const HamiltonianMatrix& h, const ComplexVector& psi0,
                      const std::vector<double>& times,
                      const RegionMap& regions, bool parallel) {
  return evolve_impl(h, psi0, times, regions, parallel);
}

EvolutionTrace evolve_serial(const HamiltonianMatrix& h,
                             const ComplexVector& psi0,
                             const std::vector<double>& times,
                             const RegionMap& regions) {
  return evolve_impl(h, psi0, times, regions, false);
}

DrainLeadComparison drain_vs_lead_experiment(const LatticeSpec& spec,
                                             const WavePacket& packet,
                                             int total_sites, bool parallel) {
  spec.validate();
  const double j = spec.hopping;
  const double gamma = spec.gamma;
  const double sigma = packet.width;
  if (!(packet.momentum > 0.0) || !(packet.momentum < kPi)) {
    throw std::domain_error("packet momentum must lie strictly inside (0, pi)");
  }
  const double v_group = 2.0 * j * std::sin(packet.momentum);
  if (v_group < 0.2 * j) {
    throw std::invalid_argument(
        "packet momentum too close to a band edge; the packet barely moves");
  }
  if (packet.center < std::lround(4.8 * sigma)) {
    throw std::invalid_argument(
        "packet center closer than 4.8 sigma to the left wall");
  }

  const int drain_distance = static_cast<int>(std::lround(4.5 * sigma));
  const int chain_sites = packet.center + drain_distance + 1;
  const int lead_sites = total_sites - chain_sites;
  if (lead_sites < 8) {
    throw std::invalid_argument(
        "total_sites leaves fewer than 8 sites for the lead");
  }
  const double horizon = (drain_distance + 5.5 * sigma) / v_group;
  const std::vector<double> times{0.0, 0.5 * horizon, horizon};

  const ComplexVector psi0 = make_packet(packet, chain_sites);
  const int drain_index = chain_sites - 1;

  // Arm 1: chain terminated by the absorbing potential.
  ComplexMatrix h_drain = open_chain(chain_sites, j);
  h_drain(drain_index, drain_index) = -kImag * gamma;
  const EvolutionTrace drained = evolve_impl(
      HamiltonianMatrix{std::move(h_drain), {}}, psi0, times, {}, parallel);
  const double absorbed = 1.0 - drained.norms.back();

  // Arm 2: same chain, terminal site carrying the mapped (nu, V) and a
  // finite lead standing in for the semi-infinite one.
  const CounterpartParams params =
      map_to_counterpart(packet.momentum, gamma, j);
  ComplexMatrix h_lead = open_chain(total_sites, j);
  h_lead(drain_index, drain_index) = params.v;
  h_lead(drain_index, drain_index + 1) = -params.nu;
  h_lead(drain_index + 1, drain_index) = -params.nu;
  ComplexVector psi0_ext = ComplexVector::Zero(total_sites);
  psi0_ext.head(chain_sites) = psi0;

  RegionMap regions;
  regions["chain"] = index_range(0, chain_sites - 1);
  regions["lead"] = index_range(chain_sites, total_sites - 1);
  regions["lead_end"] =
      index_range(total_sites - std::min(5, lead_sites), total_sites - 1);
  const EvolutionTrace led =
      evolve_impl(HamiltonianMatrix{std::move(h_lead), {}}, psi0_ext, times,
                  regions, parallel);

  const double end_mass = led.region_masses.at("lead_end").back();
  if (end_mass > 1e-8) {
    std::ostringstream msg;
    msg << "horizon violation: " << end_mass
        << " probability reached the far lead end (limit 1e-8); the finite "
           "lead no longer imitates a semi-infinite one";
    throw NumericalError(msg.str());
  }

  DrainLeadComparison cmp;
  cmp.absorbed = absorbed;
  cmp.transmitted = led.region_masses.at("lead").back();
  cmp.discrepancy = std::abs(cmp.absorbed - cmp.transmitted);
  cmp.horizon_time = horizon;
  cmp.chain_sites = chain_sites;
  cmp.lead_sites = lead_sites;
  return cmp;
}

}  // namespace ptchain
