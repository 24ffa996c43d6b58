#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <tuple>

#include "ptchain/lattice.hpp"
#include "ptchain/spectral.hpp"
#include "test_util.hpp"

using namespace ptchain;
using testutil::check_close;

namespace {

ComplexMatrix reversal_permutation(int n) {
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) p(i, n - 1 - i) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("balanced chain: two-site Hermitian limit") {
  const HamiltonianMatrix h = build_pt_chain(LatticeSpec::uniform(2, 0, 0.0));
  REQUIRE(h.dim() == 2);
  check_close(h.entries(0, 0), 0.0, 0.0);
  check_close(h.entries(0, 1), -1.0, 0.0);
  check_close(h.entries(1, 0), -1.0, 0.0);
  check_close(h.entries(1, 1), 0.0, 0.0);
  CHECK(h.is_hermitian());
}

TEST_CASE("balanced chain: dimer carries +i gamma on site 1, -i gamma on site 2") {
  const HamiltonianMatrix h = build_pt_chain(LatticeSpec::uniform(2, 0, 0.5));
  check_close(h.entries(0, 0), Complex(0.0, 0.5), 0.0);
  check_close(h.entries(1, 1), Complex(0.0, -0.5), 0.0);
  check_close(h.entries(0, 1), -1.0, 0.0);
}

TEST_CASE("balanced chain: N=3 Ns=1 puts potentials at sites 2 and 4") {
  const HamiltonianMatrix h = build_pt_chain(LatticeSpec::uniform(3, 1, 1.0));
  REQUIRE(h.dim() == 5);
  check_close(h.entries(1, 1), Complex(0.0, 1.0), 0.0);
  check_close(h.entries(3, 3), Complex(0.0, -1.0), 0.0);
  for (int i : {0, 2, 4}) check_close(h.entries(i, i), 0.0, 0.0);
  for (int i = 0; i + 1 < 5; ++i) check_close(h.entries(i, i + 1), -1.0, 0.0);
  CHECK(h.site_labels == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("balanced chain: swap flag moves the loss to the left site") {
  LatticeSpec spec = LatticeSpec::uniform(3, 1, 0.7);
  spec.swap_gain_loss = true;
  const HamiltonianMatrix h = build_pt_chain(spec);
  check_close(h.entries(1, 1), Complex(0.0, -0.7), 0.0);
  check_close(h.entries(3, 3), Complex(0.0, 0.7), 0.0);
}

TEST_CASE("balanced chain is reversal-conjugation symmetric: P conj(M) P = M") {
  for (const auto& [n, ns, gamma] :
       {std::tuple<int, int, double>{2, 0, 0.5},
        {4, 2, 1.3},
        {5, 1, 0.2}}) {
    const HamiltonianMatrix h =
        build_pt_chain(LatticeSpec::uniform(n, ns, gamma));
    const ComplexMatrix p = reversal_permutation(h.dim());
    CHECK((p * h.entries.conjugate() * p - h.entries).cwiseAbs().maxCoeff() ==
          0.0);
  }
}

TEST_CASE("gamma=0 chain reproduces the open-chain spectrum -2J cos(m pi/(L+1))") {
  const LatticeSpec spec = LatticeSpec::uniform(4, 2, 0.0, 1.25);
  const HamiltonianMatrix h = build_pt_chain(spec);
  CHECK(h.is_hermitian());
  const SpectrumReport report = eigenpairs(h);
  const int l = spec.total_sites();
  for (int m = 1; m <= l; ++m) {
    const double expected = -2.0 * spec.hopping * std::cos(m * kPi / (l + 1));
    check_close(report.pairs[m - 1].energy, expected, 1e-10);
  }
}

TEST_CASE("builders are deterministic: identical specs give bit-identical matrices") {
  const LatticeSpec spec = LatticeSpec::uniform(5, 2, 0.77);
  const HamiltonianMatrix a = build_pt_chain(spec);
  const HamiltonianMatrix b = build_pt_chain(spec);
  REQUIRE(a.dim() == b.dim());
  CHECK(std::memcmp(a.entries.data(), b.entries.data(),
                    sizeof(Complex) * a.entries.size()) == 0);
}

TEST_CASE("drain device: bare potential site") {
  const LatticeSpec spec = LatticeSpec::uniform(2, 0, 0.3);
  const HamiltonianMatrix h = build_device_with_drain(spec, Side::Left);
  REQUIRE(h.dim() == 1);
  check_close(h.entries(0, 0), Complex(0.0, -0.3), 0.0);
  CHECK(h.site_labels == std::vector<int>{0});
}

TEST_CASE("drain device: gamma=0, one sub site reduces to the 2-site chain") {
  LatticeSpec spec;
  spec.separation = 2;
  spec.sub = SubNetwork{ComplexMatrix::Zero(1, 1)};
  spec.hopping = 1.0;
  spec.gamma = 0.0;
  spec.sub_coupling = 1.0;
  const HamiltonianMatrix h = build_device_with_drain(spec, Side::Left);
  REQUIRE(h.dim() == 2);
  check_close(h.entries(0, 0), 0.0, 0.0);
  check_close(h.entries(0, 1), -1.0, 0.0);
  check_close(h.entries(1, 0), -1.0, 0.0);
  check_close(h.entries(1, 1), 0.0, 0.0);
}

TEST_CASE("drain device, both sides: hand-assembled 4x4 with -+ 0.4i on the ends") {
  const LatticeSpec spec = LatticeSpec::uniform(2, 2, 0.4);
  const HamiltonianMatrix h = build_device_with_drain(spec, Side::Both);
  REQUIRE(h.dim() == 4);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = Complex(0.0, -0.4);
  expected(3, 3) = Complex(0.0, 0.4);
  for (int i = 0; i + 1 < 4; ++i) {
    expected(i, i + 1) = -1.0;
    expected(i + 1, i) = -1.0;
  }
  CHECK((h.entries - expected).cwiseAbs().maxCoeff() == 0.0);
  // Balanced device: reversal-conjugation symmetric.
  const ComplexMatrix p = reversal_permutation(4);
  CHECK((p * h.entries.conjugate() * p - h.entries).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("drain device: source kind flips every imaginary sign") {
  const LatticeSpec spec = LatticeSpec::uniform(2, 1, 0.9);
  const HamiltonianMatrix drain = build_device_with_drain(spec, Side::Left);
  const HamiltonianMatrix source =
      build_device_with_drain(spec, Side::Left, ImagKind::Source);
  CHECK((drain.entries.conjugate() - source.entries).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("drain device: right side mirrors the left one") {
  LatticeSpec spec;
  spec.separation = 2;
  spec.sub = SubNetwork{ComplexMatrix::Zero(2, 2)};
  spec.sub.kappa(0, 0) = 0.3;
  spec.sub.kappa(1, 1) = -0.1;
  spec.sub.kappa(0, 1) = Complex(-0.5, 0.2);
  spec.sub.kappa(1, 0) = Complex(-0.5, -0.2);
  spec.gamma = 0.6;
  spec.sub_coupling = 0.8;
  const HamiltonianMatrix left = build_device_with_drain(spec, Side::Left);
  const HamiltonianMatrix right = build_device_with_drain(spec, Side::Right);
  const int d = left.dim();
  const ComplexMatrix p = reversal_permutation(d);
  // Site reversal alone (no conjugation) maps the left device to the right.
  CHECK((p * left.entries * p - right.entries).cwiseAbs().maxCoeff() == 0.0);
  CHECK(right.site_labels == std::vector<int>{2, 1, 0});
}

TEST_CASE("Hermitian device: single site with V") {
  const LatticeSpec spec = LatticeSpec::uniform(2, 0, 0.0);
  const HamiltonianMatrix h = build_hermitian_device(spec, 0.7, Side::Left);
  REQUIRE(h.dim() == 1);
  check_close(h.entries(0, 0), 0.7, 0.0);
}

TEST_CASE("Hermitian device, both sides: V=0, N=3, Ns=0 is the open 3-chain") {
  const LatticeSpec spec = LatticeSpec::uniform(3, 0, 0.0);
  const HamiltonianMatrix h = build_hermitian_device(spec, 0.0, Side::Both);
  REQUIRE(h.dim() == 3);
  CHECK(h.is_hermitian());
  check_close(h.entries(0, 1), -1.0, 0.0);
  check_close(h.entries(1, 2), -1.0, 0.0);
  CHECK(h.entries.diagonal().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Hermitian device, both sides: V sits on sites Ns+1 and Ns+N") {
  // N=2, Ns=1: potentials on interior sites 2 and 3 of the 4-site region.
  const HamiltonianMatrix a = build_hermitian_device(
      LatticeSpec::uniform(2, 1, 0.0), -0.25, Side::Both);
  REQUIRE(a.dim() == 4);
  check_close(a.entries(0, 0), 0.0, 0.0);
  check_close(a.entries(1, 1), -0.25, 0.0);
  check_close(a.entries(2, 2), -0.25, 0.0);
  check_close(a.entries(3, 3), 0.0, 0.0);

  // N=4, Ns=0: potentials on the end sites 1 and 4.
  const HamiltonianMatrix b = build_hermitian_device(
      LatticeSpec::uniform(4, 0, 0.0), -0.25, Side::Both);
  REQUIRE(b.dim() == 4);
  check_close(b.entries(0, 0), -0.25, 0.0);
  check_close(b.entries(1, 1), 0.0, 0.0);
  check_close(b.entries(2, 2), 0.0, 0.0);
  check_close(b.entries(3, 3), -0.25, 0.0);
}

TEST_CASE("validation: rejected specs") {
  CHECK_THROWS_AS(build_pt_chain(LatticeSpec::uniform(1, 0, 0.0)),
                  std::invalid_argument);  // N + 2Ns < 2
  CHECK_THROWS_AS(LatticeSpec::uniform(2, 0, 0.5, 0.0),
                  std::invalid_argument);  // J <= 0
  CHECK_THROWS_AS(LatticeSpec::uniform(2, 0, -0.5), std::invalid_argument);

  LatticeSpec bad = LatticeSpec::uniform(2, 2, 0.5);
  bad.sub.kappa(0, 1) = Complex(0.0, 0.5);  // breaks Hermiticity
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  LatticeSpec general = LatticeSpec::uniform(2, 2, 0.5);
  general.sub.kappa(0, 0) = 0.4;  // Hermitian but not the uniform chain
  CHECK_THROWS_AS(build_pt_chain(general), std::invalid_argument);
  CHECK_NOTHROW(build_device_with_drain(general, Side::Left));
}

TEST_CASE("N=1 degenerate chain: gain and loss cancel on the shared site") {
  const LatticeSpec spec = LatticeSpec::uniform(1, 1, 0.8);
  const HamiltonianMatrix h = build_pt_chain(spec);
  REQUIRE(h.dim() == 3);
  CHECK(h.is_hermitian());
}
