#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptchain/common.hpp"
#include "ptchain/lattice.hpp"

namespace ptchain {

/// Gaussian-modulated plane wave e^{i k0 j} exp(-(j - x0)^2 / (2 sigma^2)),
/// normalized over the chain. Site indices are 0-based matrix indices.
struct WavePacket {
  int center = 0;       // x0
  double momentum = 0;  // k0 in (0, pi)
  double width = 1.0;   // sigma in sites
};

/// Materializes the packet on an n-site chain. Throws std::invalid_argument
/// when the tail mass that would fall outside the chain exceeds 1e-10.
ComplexVector make_packet(const WavePacket& packet, int n_sites);

/// Site-index sets over which probability is tallied per time step.
using RegionMap = std::map<std::string, std::vector<int>>;

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<double> norms;  // total probability sum |psi_j|^2 per time
  std::map<std::string, std::vector<double>> region_masses;
  std::vector<ComplexVector> states;  // psi(t) per requested time
};

/// psi(t) = V exp(-i Lambda t) V^{-1} psi0 by dense eigendecomposition:
/// exact at these sizes, no step error. Real-symmetric and Hermitian
/// matrices take the orthogonal/unitary fast path; general matrices go
/// through the non-symmetric solver and are rejected near an exceptional
/// point (eigenvector condition estimate > 1e12). Times must be
/// non-decreasing.
EvolutionTrace evolve(const HamiltonianMatrix& h, const ComplexVector& psi0,
                      const std::vector<double>& times,
                      const RegionMap& regions = {}, bool parallel = true);
EvolutionTrace evolve_serial(const HamiltonianMatrix& h,
                             const ComplexVector& psi0,
                             const std::vector<double>& times,
                             const RegionMap& regions = {});

struct DrainLeadComparison {
  double absorbed = 0.0;     // 1 - total probability of the drained chain
  double transmitted = 0.0;  // probability inside the attached lead
  double discrepancy = 0.0;  // |absorbed - transmitted|
  double horizon_time = 0.0;
  int chain_sites = 0;
  int lead_sites = 0;
};

/// Shoots one packet at a chain-terminating imaginary potential, then at
/// the matched (nu, V) lead termination of the same chain, and compares the
/// removed probability against the probability that escaped into the lead.
/// The lead is sized by total_sites - chain; a run where probability piles
/// up at the far lead end (mass > 1e-8 on the last sites) is rejected as
/// inconclusive.
DrainLeadComparison drain_vs_lead_experiment(const LatticeSpec& spec,
                                             const WavePacket& packet,
                                             int total_sites,
                                             bool parallel = true);

}  // namespace ptchain
