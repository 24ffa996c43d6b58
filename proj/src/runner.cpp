#include "ptchain/runner.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ptchain/bethe.hpp"
#include "ptchain/correspondence.hpp"
#include "ptchain/dynamics.hpp"
#include "ptchain/lattice.hpp"
#include "ptchain/scattering.hpp"
#include "ptchain/spectral.hpp"

namespace ptchain {

namespace {

std::vector<int> axis(const std::vector<int>& values, int base) {
  return values.empty() ? std::vector<int>{base} : values;
}

std::vector<double> axis(const std::vector<double>& values, double base) {
  return values.empty() ? std::vector<double>{base} : values;
}

std::vector<LatticeSpec> lattice_grid(const RunConfig& config) {
  std::vector<LatticeSpec> grid;
  for (int n : axis(config.n_values, config.n)) {
    for (int ns : axis(config.ns_values, config.ns)) {
      for (double gamma : axis(config.gamma_values, config.gamma)) {
        LatticeSpec spec = LatticeSpec::uniform(n, ns, gamma, config.j);
        spec.swap_gain_loss = config.swap_gain_loss;
        grid.push_back(std::move(spec));
      }
    }
  }
  return grid;
}

CommandResult run_spectrum(const RunConfig& config) {
  CommandResult result;
  result.table.columns = {
      {"N", ColumnType::Integer},       {"Ns", ColumnType::Integer},
      {"gamma", ColumnType::Real},      {"J", ColumnType::Real},
      {"index", ColumnType::Integer},   {"energy_re", ColumnType::Real},
      {"energy_im", ColumnType::Real},  {"is_real", ColumnType::Boolean},
      {"pt_residual", ColumnType::Real},{"n_real", ColumnType::Integer},
      {"pt_unbroken", ColumnType::Boolean}};
  for (const LatticeSpec& spec : lattice_grid(config)) {
    const SpectrumReport report = eigenpairs(build_pt_chain(spec));
    for (std::size_t i = 0; i < report.pairs.size(); ++i) {
      const EigenPair& pair = report.pairs[i];
      result.table.add_row({static_cast<double>(spec.separation),
                            static_cast<double>(spec.sub_size()), spec.gamma,
                            spec.hopping, static_cast<double>(i),
                            pair.energy.real(), pair.energy.imag(),
                            pair.is_real ? 1.0 : 0.0,
                            pt_symmetry_residual(pair.vector),
                            static_cast<double>(report.n_real),
                            report.pt_unbroken ? 1.0 : 0.0});
    }
  }
  return result;
}

CommandResult run_roots(const RunConfig& config) {
  CommandResult result;
  result.table.columns = {
      {"N", ColumnType::Integer},      {"Ns", ColumnType::Integer},
      {"gamma", ColumnType::Real},     {"J", ColumnType::Real},
      {"k", ColumnType::Real},         {"energy", ColumnType::Real},
      {"chi_re", ColumnType::Real},    {"chi_im", ColumnType::Real},
      {"residual", ColumnType::Real},  {"double_root", ColumnType::Boolean},
      {"n_roots", ColumnType::Integer}};
  RootScanOptions options;
  options.enforce_min_count = config.roots_enforce_min_count;
  for (const LatticeSpec& spec : lattice_grid(config)) {
    const std::vector<BetheRoot> roots = find_real_roots(spec, options);
    for (const BetheRoot& root : roots) {
      result.table.add_row({static_cast<double>(spec.separation),
                            static_cast<double>(spec.sub_size()), spec.gamma,
                            spec.hopping, root.k, root.energy,
                            root.chi.real(), root.chi.imag(), root.residual,
                            root.double_root ? 1.0 : 0.0,
                            static_cast<double>(roots.size())});
    }
  }
  return result;
}

CommandResult run_scatter(const RunConfig& config) {
  CommandResult result;
  result.table.columns = {
      {"N", ColumnType::Integer},     {"Ns", ColumnType::Integer},
      {"V", ColumnType::Real},        {"nu", ColumnType::Real},
      {"J", ColumnType::Real},        {"k", ColumnType::Real},
      {"xi_re", ColumnType::Real},    {"xi_im", ColumnType::Real},
      {"r_re", ColumnType::Real},     {"r_im", ColumnType::Real},
      {"t_re", ColumnType::Real},     {"t_im", ColumnType::Real},
      {"closed_vs_numeric", ColumnType::Real},
      {"flux_defect", ColumnType::Real}};
  for (int n : axis(config.n_values, config.n)) {
    for (int ns : axis(config.ns_values, config.ns)) {
      const LatticeSpec spec = LatticeSpec::uniform(n, ns, 0.0, config.j);
      const HamiltonianMatrix device =
          build_hermitian_device(spec, config.v, Side::Both);
      for (double k : axis(config.k_values, config.k)) {
        const ScatteringSolution closed =
            closed_form_r(k, n, ns, config.v, config.nu, config.j);
        const ScatteringSolution numeric =
            solve_two_lead(device, ns, ns + n - 1, config.nu, config.nu, k,
                           config.j);
        const double flux = std::norm(numeric.r) + std::norm(*numeric.t);
        result.table.add_row(
            {static_cast<double>(n), static_cast<double>(ns), config.v,
             config.nu, config.j, k, closed.xi->real(), closed.xi->imag(),
             numeric.r.real(), numeric.r.imag(), numeric.t->real(),
             numeric.t->imag(), std::abs(closed.r - numeric.r),
             std::abs(flux - 1.0)});
      }
    }
  }
  return result;
}

CommandResult run_correspond(const RunConfig& config) {
  CommandResult result;
  result.table.columns = {
      {"N", ColumnType::Integer},   {"Ns", ColumnType::Integer},
      {"gamma", ColumnType::Real},  {"k", ColumnType::Real},
      {"E", ColumnType::Real},      {"nu", ColumnType::Real},
      {"V", ColumnType::Real},      {"r_abs", ColumnType::Real},
      {"t_abs", ColumnType::Real},  {"align_residual", ColumnType::Real},
      {"J", ColumnType::Real},      {"scalar_re", ColumnType::Real},
      {"scalar_im", ColumnType::Real}, {"vacuous", ColumnType::Boolean}};
  const SweepResult swept = sweep(lattice_grid(config));
  for (const SweepRow& row : swept.rows) {
    const CorrespondenceReport& report = row.report;
    result.table.add_row(
        {static_cast<double>(row.n), static_cast<double>(row.ns), row.gamma,
         report.root.k, report.root.energy, report.params.nu, report.params.v,
         report.r_abs, report.t_abs, report.align_residual, row.j,
         report.scalar.real(), report.scalar.imag(),
         report.vacuous ? 1.0 : 0.0});
  }
  result.failures = swept.errors;
  return result;
}

CommandResult run_evolve(const RunConfig& config) {
  CommandResult result;
  result.table.columns = {
      {"gamma", ColumnType::Real},       {"J", ColumnType::Real},
      {"k0", ColumnType::Real},          {"sigma", ColumnType::Real},
      {"center", ColumnType::Integer},   {"total_sites", ColumnType::Integer},
      {"chain_sites", ColumnType::Integer},
      {"lead_sites", ColumnType::Integer},
      {"horizon_time", ColumnType::Real},{"absorbed", ColumnType::Real},
      {"transmitted", ColumnType::Real}, {"discrepancy", ColumnType::Real}};
  for (double gamma : axis(config.gamma_values, config.gamma)) {
    for (double sigma : axis(config.sigma_values, config.sigma)) {
      LatticeSpec spec = LatticeSpec::uniform(2, 0, gamma, config.j);
      WavePacket packet;
      packet.momentum = config.k0;
      packet.width = sigma;
      packet.center = config.center >= 0
                          ? config.center
                          : static_cast<int>(std::lround(5.0 * sigma));
      const DrainLeadComparison cmp =
          drain_vs_lead_experiment(spec, packet, config.total_sites);
      result.table.add_row(
          {gamma, config.j, config.k0, sigma,
           static_cast<double>(packet.center),
           static_cast<double>(config.total_sites),
           static_cast<double>(cmp.chain_sites),
           static_cast<double>(cmp.lead_sites), cmp.horizon_time,
           cmp.absorbed, cmp.transmitted, cmp.discrepancy});
    }
  }
  return result;
}

std::string error_record(const std::string& kind, const std::string& what) {
  nlohmann::ordered_json record;
  record["error"]["type"] = kind;
  record["error"]["what"] = what;
  return record.dump() + "\n";
}

}  // namespace

CommandResult run_command(const RunConfig& config) {
  switch (config.command) {
    case Command::Spectrum: return run_spectrum(config);
    case Command::Roots: return run_roots(config);
    case Command::Scatter: return run_scatter(config);
    case Command::Correspond: return run_correspond(config);
    case Command::Evolve: return run_evolve(config);
  }
  throw std::invalid_argument("unknown command");
}

int run(const RunConfig& config, std::ostream& data_out, std::ostream& diag) {
  CommandResult result;
  try {
    result = run_command(config);
  } catch (const std::invalid_argument& e) {
    diag << error_record("validation", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    diag << error_record("validation", e.what());
    return 1;
  } catch (const std::exception& e) {
    diag << error_record("numerical", e.what());
    return 2;
  }

  const std::string payload = config.format == OutputFormat::Csv
                                  ? to_csv(result.table)
                                  : to_json(result.table);
  if (config.out_path.empty()) {
    data_out << payload;
  } else {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
      diag << error_record("validation",
                           "cannot open output path '" + config.out_path + "'");
      return 1;
    }
    file << payload;
  }

  if (!result.failures.empty()) {
    std::ostringstream what;
    what << result.failures.size() << " item(s) failed; first: "
         << result.failures.front();
    diag << error_record("numerical", what.str());
    return 2;
  }
  return 0;
}

}  // namespace ptchain
