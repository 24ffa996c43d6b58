#include "ptchain/correspondence.hpp"

#include <cmath>
#include <sstream>

#include "ptchain/parallel.hpp"
#include "ptchain/scattering.hpp"

namespace ptchain {

CounterpartParams map_to_counterpart(double k, double gamma, double j) {
  if (!(j > 0.0)) throw std::invalid_argument("hopping J must be > 0");
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
  if (!(k > 0.0) || !(k < kPi)) {
    throw std::domain_error("k must lie strictly inside (0, pi)");
  }
  const double energy = -2.0 * j * std::cos(k);
  const double omega = std::sqrt(4.0 * j * j - energy * energy);
  if (!(omega > 0.0) || !std::isfinite(2.0 * gamma * j * j / omega)) {
    throw std::domain_error("band-edge singularity: Omega vanishes at this k");
  }

  CounterpartParams params;
  params.k = k;
  params.gamma = gamma;
  params.j = j;
  params.omega = omega;
  params.nu = std::sqrt(2.0 * gamma * j * j / omega);
  params.v = -gamma * energy / omega;

  // Both defining identities must hold; they are algebraically equivalent,
  // so a violation means a numerics bug.
  const double scale = std::max(1.0, gamma * j);
  const double nu2 = params.nu * params.nu;
  if (std::abs(nu2 * std::sin(k) - gamma * j) > 1e-12 * scale ||
      std::abs(nu2 * std::cos(k) - params.v * j) > 1e-12 * scale) {
    throw NumericalError("counterpart map failed its defining identities");
  }
  return params;
}

CorrespondenceReport verify_root(const LatticeSpec& spec,
                                 const BetheRoot& root) {
  spec.validate();
  CorrespondenceReport report;
  report.root = root;

  if (spec.gamma == 0.0) {
    // nu = 0 detaches the leads; there is no scattering problem to compare
    // against. Flagged as vacuous rather than attempting a 0/0 resonance.
    report.vacuous = true;
    report.params.k = root.k;
    report.params.j = spec.hopping;
    return report;
  }

  report.params = map_to_counterpart(root.k, spec.gamma, spec.hopping);

  const int ns = spec.sub_size();
  const HamiltonianMatrix device =
      build_hermitian_device(spec, report.params.v, Side::Both);
  const ScatteringSolution scatter =
      solve_two_lead(device, ns, ns + spec.separation - 1, report.params.nu,
                     report.params.nu, root.k, spec.hopping);

  const ComplexVector psi_pt = eigenfunction_from_root(root, spec).second;
  const ComplexVector& psi_scatter = scatter.psi_device;

  const double scatter_norm2 = psi_scatter.squaredNorm();
  if (scatter_norm2 <= 0.0) {
    throw NumericalError("scattering state vanished on the common region");
  }
  report.scalar = psi_scatter.dot(psi_pt) / scatter_norm2;
  report.align_residual = (psi_pt - report.scalar * psi_scatter).norm();
  report.r_abs = std::abs(scatter.r);
  report.t_abs = std::abs(scatter.t.value());

  if (report.align_residual >= 1e-6) {
    std::ostringstream msg;
    msg << "correspondence failure at k=" << root.k << " (N="
        << spec.separation << ", Ns=" << ns << ", gamma=" << spec.gamma
        << "): alignment residual " << report.align_residual
        << " >= 1e-6";
    throw NumericalError(msg.str());
  }
  return report;
}

namespace {

SweepResult sweep_impl(const std::vector<LatticeSpec>& grid, bool parallel) {
  if (grid.empty()) throw std::invalid_argument("sweep grid must be nonempty");

  struct Item {
    int spec_index;
    BetheRoot root;
  };
  std::vector<Item> items;
  std::vector<std::string> spec_errors(grid.size());

  RootScanOptions scan;
  scan.enforce_min_count = false;
  scan.parallel = parallel;
  for (int s = 0; s < static_cast<int>(grid.size()); ++s) {
    try {
      for (const BetheRoot& root : find_real_roots(grid[s], scan)) {
        items.push_back({s, root});
      }
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "spec " << s << ": " << e.what();
      spec_errors[s] = msg.str();
    }
  }

  struct Slot {
    bool ok = false;
    CorrespondenceReport report;
    std::string error;
  };
  std::vector<Slot> slots(items.size());
  par::run_indexed(static_cast<std::int64_t>(items.size()), parallel,
                   [&](std::int64_t i) {
                     const Item& item = items[i];
                     try {
                       slots[i].report =
                           verify_root(grid[item.spec_index], item.root);
                       slots[i].ok = true;
                     } catch (const std::exception& e) {
                       std::ostringstream msg;
                       msg << "spec " << item.spec_index
                           << " k=" << item.root.k << ": " << e.what();
                       slots[i].error = msg.str();
                     }
                   });

  SweepResult result;
  for (const std::string& err : spec_errors) {
    if (!err.empty()) result.errors.push_back(err);
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].ok) {
      const LatticeSpec& spec = grid[items[i].spec_index];
      result.rows.push_back(SweepRow{spec.separation, spec.sub_size(),
                                     spec.gamma, spec.hopping,
                                     slots[i].report});
      ++result.n_pass;
    } else {
      result.errors.push_back(slots[i].error);
    }
  }
  result.n_fail = static_cast<int>(result.errors.size());
  return result;
}

}  // namespace

SweepResult sweep(const std::vector<LatticeSpec>& grid, bool parallel) {
  return sweep_impl(grid, parallel);
}

SweepResult sweep_serial(const std::vector<LatticeSpec>& grid) {
  return sweep_impl(grid, false);
}

}  // namespace ptchain
