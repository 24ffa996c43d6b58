#pragma once

#include <vector>

#include "ptchain/common.hpp"

namespace ptchain {

/// Hermitian sub-network of `size()` sites. `kappa(i, j)` is the full
/// Hamiltonian block of the sub-network in units of energy: the builders
/// copy it verbatim, so any sign convention for the couplings is the
/// caller's. An empty (0-site) sub-network is legal.
struct SubNetwork {
  ComplexMatrix kappa;

  int size() const { return static_cast<int>(kappa.rows()); }

  static SubNetwork empty();
  /// Open uniform chain of ns sites with hopping matrix elements -j.
  static SubNetwork uniform_chain(int ns, double j);

  bool is_uniform_chain(double j, double tol = 1e-12) const;

  /// Throws std::invalid_argument unless kappa is square and Hermitian
  /// within 1e-14.
  void validate() const;
};

/// Parameters of the lattice family. `separation` is the number of sites
/// from one potential site to the other, inclusive (the segment
/// [Ns+1, Ns+N] of the balanced chain). The sub-network is used
/// symmetrically on both ends of the balanced chain and as the single
/// attached network of the one-potential devices.
struct LatticeSpec {
  int separation = 2;          // N
  SubNetwork sub;              // Ns sites, couplings kappa
  double hopping = 1.0;        // J > 0
  double gamma = 0.0;          // imaginary potential strength, >= 0
  double sub_coupling = 1.0;   // g, potential site <-> sub-network site 1
  bool swap_gain_loss = false; // put the loss on the left interior site

  int sub_size() const { return sub.size(); }
  int total_sites() const { return separation + 2 * sub.size(); }

  /// Uniform-chain spec: sub-network is an open chain with hopping j and
  /// the sub-coupling g equals j, so the balanced chain is uniform.
  static LatticeSpec uniform(int n, int ns, double gamma, double j = 1.0);

  void validate() const;
};

/// Dense single-particle matrix with the map from matrix index to lattice
/// site label.
struct HamiltonianMatrix {
  ComplexMatrix entries;
  std::vector<int> site_labels;

  int dim() const { return static_cast<int>(entries.rows()); }
  bool is_hermitian(double tol = 1e-14) const;
};

enum class Side { Left, Right, Both };
enum class ImagKind { Drain, Source };

/// Balanced gain/loss chain: uniform hopping -J on all nearest-neighbor
/// bonds of the N+2Ns site chain, +i*gamma at site Ns+1 and -i*gamma at
/// site N+Ns (swapped when spec.swap_gain_loss). Requires a uniform-chain
/// sub-network. Site labels are 1..N+2Ns.
HamiltonianMatrix build_pt_chain(const LatticeSpec& spec);

/// Finite device region for one-lead scattering: the potential site(s)
/// plus the sub-network. The lead itself is not part of the matrix; module
/// scattering attaches it as a self-energy closure.
///   Left:  [potential, sub 1..Ns],            potential -i*gamma (drain)
///   Right: [sub Ns..1, potential],            potential -i*gamma (drain)
///   Both:  [potential, sub 1..Ns, potential], -i*gamma left, +i*gamma right
/// ImagKind::Source flips every sign. The g coupling joins each potential
/// site to the adjacent sub-network end.
HamiltonianMatrix build_device_with_drain(const LatticeSpec& spec, Side side,
                                          ImagKind kind = ImagKind::Drain);

/// Hermitian counterpart devices. Left/Right mirror build_device_with_drain
/// with the real potential v in place of the imaginary one. Both builds the
/// full two-potential region instead: the uniform chain of N+2Ns sites with
/// v on sites Ns+1 and Ns+N (labels 1..N+2Ns), i.e. the finite region the
/// two extra leads attach to.
HamiltonianMatrix build_hermitian_device(const LatticeSpec& spec, double v,
                                         Side side);

}  // namespace ptchain
