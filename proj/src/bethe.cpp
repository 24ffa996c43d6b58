#include "ptchain/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "ptchain/parallel.hpp"

namespace ptchain {

namespace {

void require_uniform_bethe_spec(const LatticeSpec& spec) {
  spec.validate();
  if (spec.separation < 2) {
    throw std::invalid_argument(
        "quantization ops need two distinct potential sites (N >= 2)");
  }
  if (spec.sub_size() > 0 && !spec.sub.is_uniform_chain(spec.hopping)) {
    throw std::invalid_argument(
        "quantization ops apply to the uniform-chain sub-network only");
  }
}

double sin_defect(double k, int n, int ns, double j, double gamma) {
  const double s1 = std::sin(k * (ns + 1));
  return gamma * gamma * s1 * s1 * std::sin(k * (1.0 - n)) -
         j * j * std::sin(k) * std::sin(k) * std::sin(k * (n + 2 * ns + 1));
}

/// Golden-section minimization of |f| on [a, b].
double minimize_abs(const std::function<double(double)>& f, double a, double b,
                    double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = std::abs(f(c));
  double fd = std::abs(f(d));
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = std::abs(f(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = std::abs(f(d));
    }
  }
  return (fc < fd) ? c : d;
}

BetheRoot make_root(double k, const LatticeSpec& spec, bool double_root) {
  BetheRoot root;
  root.k = k;
  root.energy = -2.0 * spec.hopping * std::cos(k);
  root.chi = Complex(std::sin(k * (spec.sub_size() + 1)) / std::sin(k), 0.0);
  root.residual = std::abs(sin_defect(k, spec.separation, spec.sub_size(),
                                      spec.hopping, spec.gamma));
  root.double_root = double_root;
  return root;
}

}  // namespace

Complex quantization_residual(double k, const LatticeSpec& spec) {
  require_uniform_bethe_spec(spec);
  if (!(k > 0.0) || !(k < kPi)) {
    throw std::domain_error("quasi-momentum k must lie strictly inside (0, pi)");
  }
  // The defect is real for real k by construction; the complex return type
  // keeps the interface uniform with the complex-exponential form.
  return Complex(sin_defect(k, spec.separation, spec.sub_size(), spec.hopping,
                            spec.gamma),
                 0.0);
}

std::vector<BetheRoot> find_real_roots(const LatticeSpec& spec,
                                       const RootScanOptions& options) {
  require_uniform_bethe_spec(spec);
  const int n = spec.separation;
  const int ns = spec.sub_size();
  const double j = spec.hopping;
  const double gamma = spec.gamma;
  const auto defect = [&](double k) { return sin_defect(k, n, ns, j, gamma); };

  const int n_grid =
      options.grid_points_per_mode * (spec.total_sites() + 1) + 1;
  const double lo = options.edge_margin;
  const double hi = kPi - options.edge_margin;
  const double dk = (hi - lo) / (n_grid - 1);

  std::vector<double> ks(n_grid), fs(n_grid);
  par::run_indexed(n_grid, options.parallel, [&](std::int64_t i) {
    ks[i] = lo + static_cast<double>(i) * dk;
    fs[i] = defect(ks[i]);
  });

  double scale = 0.0;
  for (double f : fs) scale = std::max(scale, std::abs(f));
  if (scale <= 0.0) {
    throw NumericalError("quantization defect vanished on the whole scan grid");
  }

  // Sign-change brackets (exact zeros at grid nodes count as roots).
  std::vector<int> brackets;
  std::vector<double> node_roots;
  for (int i = 0; i + 1 < n_grid; ++i) {
    if (fs[i] == 0.0) node_roots.push_back(ks[i]);
    else if (fs[i] * fs[i + 1] < 0.0) brackets.push_back(i);
  }
  if (fs[n_grid - 1] == 0.0) node_roots.push_back(ks[n_grid - 1]);

  std::vector<double> bracket_roots(brackets.size());
  par::run_indexed(static_cast<std::int64_t>(brackets.size()),
                   options.parallel, [&](std::int64_t b) {
    double a = ks[brackets[b]];
    double c = ks[brackets[b] + 1];
    double fa = fs[brackets[b]];
    while (c - a > options.k_tolerance) {
      const double m = 0.5 * (a + c);
      const double fm = defect(m);
      if (fm == 0.0) {
        a = c = m;
        break;
      }
      if ((fa < 0.0) == (fm < 0.0)) {
        a = m;
        fa = fm;
      } else {
        c = m;
      }
    }
    const double m = 0.5 * (a + c);
    bracket_roots[b] = m;
  });

  // Touching zeros: local minima of |f| with no adjacent sign change.
  std::vector<int> touch_candidates;
  for (int i = 1; i + 1 < n_grid; ++i) {
    const bool local_min = std::abs(fs[i]) <= std::abs(fs[i - 1]) &&
                           std::abs(fs[i]) <= std::abs(fs[i + 1]);
    const bool same_sign = fs[i - 1] * fs[i + 1] > 0.0 &&
                           fs[i - 1] * fs[i] > 0.0;
    if (local_min && same_sign && std::abs(fs[i]) < 1e-3 * scale) {
      touch_candidates.push_back(i);
    }
  }
  std::vector<double> touch_roots(touch_candidates.size(),
                                  std::numeric_limits<double>::quiet_NaN());
  par::run_indexed(static_cast<std::int64_t>(touch_candidates.size()),
                   options.parallel, [&](std::int64_t t) {
    const int i = touch_candidates[t];
    const double k_min = minimize_abs(defect, ks[i - 1], ks[i + 1], 1e-12);
    if (std::abs(defect(k_min)) < 1e-12) touch_roots[t] = k_min;
  });

  struct Candidate {
    double k;
    bool double_root;
  };
  std::vector<Candidate> candidates;
  for (double k : node_roots) candidates.push_back({k, false});
  for (double k : bracket_roots) candidates.push_back({k, false});
  for (double k : touch_roots) {
    if (std::isfinite(k)) candidates.push_back({k, true});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.k < b.k; });

  std::vector<BetheRoot> roots;
  for (const Candidate& c : candidates) {
    if (!roots.empty() && c.k - roots.back().k < options.dedupe_tolerance)
      continue;
    roots.push_back(make_root(c.k, spec, c.double_root));
  }

  for (const BetheRoot& root : roots) {
    if (root.residual > 1e-10) {
      std::ostringstream msg;
      msg << "refined root k=" << root.k << " keeps defect " << root.residual
          << " > 1e-10; scan resolution bug";
      throw NumericalError(msg.str());
    }
  }

  if (options.enforce_min_count &&
      static_cast<int>(roots.size()) < n - 1) {
    std::ostringstream msg;
    msg << "found " << roots.size() << " real quantization roots, below the "
        << "guaranteed floor N-1=" << (n - 1)
        << " (expected only in strongly broken-symmetry regimes; rerun with "
           "the count check disabled to inspect)";
    throw NumericalError(msg.str());
  }
  return roots;
}

std::pair<PlaneWaveCoeffs, ComplexVector> eigenfunction_from_root(
    const BetheRoot& root, const LatticeSpec& spec) {
  require_uniform_bethe_spec(spec);
  if (root.residual > 1e-10) {
    throw std::invalid_argument(
        "eigenfunction_from_root needs a refined root (residual < 1e-10)");
  }
  const int n = spec.separation;
  const int ns = spec.sub_size();
  const int l = spec.total_sites();
  const double j = spec.hopping;
  const double k = root.k;
  const Complex eps(root.energy, 0.0);
  const Complex gain = (spec.swap_gain_loss ? -kImag : kImag) * spec.gamma;
  const auto zp = [&](double m) { return std::exp(kImag * (k * m)); };  // e^{ikm}

  const int site_gain = ns + 1;  // carries +i gamma (default orientation)
  const int site_loss = ns + n;

  // Unknown order: (a, b, c_left, d_left, c_right, d_right).
  ComplexMatrix sys = ComplexMatrix::Zero(6, 6);
  // Hard-wall closures f(0) = 0 and f(L+1) = 0.
  sys(0, 2) = zp(0);
  sys(0, 3) = zp(0);
  sys(1, 4) = zp(l + 1);
  sys(1, 5) = zp(-(l + 1));
  // Continuity at the two potential sites.
  sys(2, 0) = zp(site_gain);
  sys(2, 1) = zp(-site_gain);
  sys(2, 2) = -zp(site_gain);
  sys(2, 3) = -zp(-site_gain);
  sys(3, 0) = zp(site_loss);
  sys(3, 1) = zp(-site_loss);
  sys(3, 4) = -zp(site_loss);
  sys(3, 5) = -zp(-site_loss);
  // Potential-site equations:
  //   -J f(m+1) - J f(m-1) = (eps -+ i gamma) f(m)
  // with f(m+1) from the middle region, f(m-1) from the outer one.
  sys(4, 0) = -j * zp(site_gain + 1) - (eps - gain) * zp(site_gain);
  sys(4, 1) = -j * zp(-(site_gain + 1)) - (eps - gain) * zp(-site_gain);
  sys(4, 2) = -j * zp(site_gain - 1);
  sys(4, 3) = -j * zp(-(site_gain - 1));
  sys(5, 0) = -j * zp(site_loss - 1) - (eps + gain) * zp(site_loss);
  sys(5, 1) = -j * zp(-(site_loss - 1)) - (eps + gain) * zp(-site_loss);
  sys(5, 4) = -j * zp(site_loss + 1);
  sys(5, 5) = -j * zp(-(site_loss + 1));

  const Eigen::JacobiSVD<ComplexMatrix> svd(
      sys, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  if (sv(5) > 1e-8 * smax) {
    std::ostringstream msg;
    msg << "matching system has no null direction at k=" << k
        << " (smallest singular value ratio " << sv(5) / smax
        << "); root inconsistent";
    throw NumericalError(msg.str());
  }
  if (sv(4) <= 1e-8 * smax) {
    std::ostringstream msg;
    msg << "matching system null space has dimension >= 2 at k=" << k
        << "; degenerate root";
    throw NumericalError(msg.str());
  }
  Eigen::Matrix<Complex, 6, 1> x = svd.matrixV().col(5);

  ComplexVector psi(l);
  for (int site = 1; site <= l; ++site) {
    Complex value;
    if (site <= ns) {
      value = x(2) * zp(site) + x(3) * zp(-site);
    } else if (site <= ns + n) {
      value = x(0) * zp(site) + x(1) * zp(-site);
    } else {
      value = x(4) * zp(site) + x(5) * zp(-site);
    }
    psi(site - 1) = value;
  }

  const double norm = psi.norm();
  if (norm <= 0.0) throw NumericalError("null direction produced a zero vector");
  Eigen::Index arg_max = 0;
  psi.cwiseAbs().maxCoeff(&arg_max);
  const Complex phase = std::conj(psi(arg_max)) / std::abs(psi(arg_max));
  psi *= phase / norm;
  x *= phase / norm;

  const HamiltonianMatrix h = build_pt_chain(spec);
  const double schrodinger_residual = (h.entries * psi - eps * psi).norm();
  const double gate = root.double_root ? 1e-5 : 1e-9;
  if (schrodinger_residual > gate) {
    std::ostringstream msg;
    msg << "reconstructed eigenfunction violates the eigenvalue equation: "
        << "residual " << schrodinger_residual << " at k=" << k;
    throw NumericalError(msg.str());
  }

  PlaneWaveCoeffs coeffs{x(0), x(1), x(2), x(3), x(4), x(5)};
  return {coeffs, std::move(psi)};
}

}  // namespace ptchain
