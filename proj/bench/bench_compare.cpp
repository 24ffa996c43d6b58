// Compares the OpenMP kernels against their serial reference paths on
// medium-sized workloads: same inputs, wall time for each path, and the
// largest deviation between the two result sets (expected to be exactly 0;
// every item writes only its own slot).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "ptchain/bethe.hpp"
#include "ptchain/correspondence.hpp"
#include "ptchain/dynamics.hpp"
#include "ptchain/lattice.hpp"
#include "ptchain/parallel.hpp"

using namespace ptchain;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(const char* name, double serial_s, double parallel_s,
            double max_dev) {
  std::printf("%-28s %10.3fs %12.3fs %9.2fx %12.3e\n", name, serial_s,
              parallel_s, serial_s / parallel_s, max_dev);
}

void bench_sweep() {
  std::vector<LatticeSpec> grid;
  for (int n = 2; n <= 6; ++n) {
    for (int ns = 0; ns <= 2; ++ns) {
      for (int g = 1; g <= 40; ++g) {
        grid.push_back(LatticeSpec::uniform(n, ns, 0.025 * g));
      }
    }
  }

  auto start = clock_type::now();
  const SweepResult serial = sweep_serial(grid);
  const double serial_s = seconds_since(start);

  start = clock_type::now();
  const SweepResult parallel = sweep(grid, true);
  const double parallel_s = seconds_since(start);

  double max_dev = std::abs(static_cast<double>(serial.rows.size()) -
                            static_cast<double>(parallel.rows.size()));
  const std::size_t rows = std::min(serial.rows.size(), parallel.rows.size());
  for (std::size_t i = 0; i < rows; ++i) {
    max_dev = std::max(
        max_dev, std::abs(serial.rows[i].report.align_residual -
                          parallel.rows[i].report.align_residual));
    max_dev = std::max(max_dev, std::abs(serial.rows[i].report.root.k -
                                         parallel.rows[i].report.root.k));
  }
  report("correspondence sweep", serial_s, parallel_s, max_dev);
}

void bench_root_scan() {
  const LatticeSpec spec = LatticeSpec::uniform(6, 2, 1.2);
  RootScanOptions options;
  options.grid_points_per_mode = 400000;  // oversampled on purpose

  options.parallel = false;
  auto start = clock_type::now();
  const std::vector<BetheRoot> serial = find_real_roots(spec, options);
  const double serial_s = seconds_since(start);

  options.parallel = true;
  start = clock_type::now();
  const std::vector<BetheRoot> parallel = find_real_roots(spec, options);
  const double parallel_s = seconds_since(start);

  double max_dev = std::abs(static_cast<double>(serial.size()) -
                            static_cast<double>(parallel.size()));
  for (std::size_t i = 0; i < std::min(serial.size(), parallel.size()); ++i) {
    max_dev = std::max(max_dev, std::abs(serial[i].k - parallel[i].k));
  }
  report("quantization root scan", serial_s, parallel_s, max_dev);
}

void bench_evolve() {
  const int sites = 700;
  LatticeSpec spec = LatticeSpec::uniform(2, 0, 0.5);
  ComplexMatrix h = ComplexMatrix::Zero(sites, sites);
  for (int i = 0; i + 1 < sites; ++i) {
    h(i, i + 1) = -1.0;
    h(i + 1, i) = -1.0;
  }
  h(sites - 1, sites - 1) = Complex(0.0, -spec.gamma);
  const HamiltonianMatrix chain{h, {}};

  WavePacket packet;
  packet.center = 250;
  packet.momentum = kPi / 2.0;
  packet.width = 40.0;
  const ComplexVector psi0 = make_packet(packet, sites);

  std::vector<double> times(1500);
  for (std::size_t i = 0; i < times.size(); ++i) times[i] = 0.1 * i;

  auto start = clock_type::now();
  const EvolutionTrace serial = evolve_serial(chain, psi0, times);
  const double serial_s = seconds_since(start);

  start = clock_type::now();
  const EvolutionTrace parallel = evolve(chain, psi0, times);
  const double parallel_s = seconds_since(start);

  double max_dev = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    max_dev = std::max(max_dev,
                       std::abs(serial.norms[i] - parallel.norms[i]));
  }
  report("wave-packet evolution", serial_s, parallel_s, max_dev);
}

}  // namespace

int main() {
  std::printf("worker cap: %d thread(s)\n\n", par::max_threads());
  std::printf("%-28s %11s %13s %10s %13s\n", "kernel", "serial", "parallel",
              "speedup", "max |dev|");
  bench_sweep();
  bench_root_scan();
  bench_evolve();
  return 0;
}
