#pragma once

// Test-only oracles and generators, kept independent of the library's
// solver paths: the characteristic polynomial comes from the
// Faddeev-LeVerrier recursion and its roots from Durand-Kerner iteration,
// never from an eigensolver.

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;

/// Coefficients of det(xI - A) = x^n + c[0] x^{n-1} + ... + c[n-1].
inline std::vector<Complex> char_poly(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Complex> c(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    m = (a * m).eval();
    c[k - 1] = -m.trace() / static_cast<double>(k);
    m += c[k - 1] * Eigen::MatrixXcd::Identity(n, n);
  }
  return c;
}

/// Durand-Kerner simultaneous root iteration for a monic polynomial.
inline std::vector<Complex> poly_roots(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size());
  const auto eval = [&](Complex x) {
    Complex p(1.0, 0.0);
    for (int i = 0; i < n; ++i) p = p * x + c[i];
    return p;
  };
  std::vector<Complex> roots(n);
  const Complex seed(0.4, 0.9);
  Complex power(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    power *= seed;
    roots[i] = power;
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex denom(1.0, 0.0);
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      const Complex delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  return roots;
}

/// Largest nearest-neighbor gap of a greedy multiset matching.
inline double multiset_distance(std::vector<Complex> a,
                                std::vector<Complex> b) {
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = std::abs(x - b[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    worst = std::max(worst, best_d);
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

inline Eigen::MatrixXcd random_complex_matrix(int n, std::mt19937& rng,
                                              double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(u(rng), u(rng));
  return m;
}

/// Hermitian matrix with entries bounded by `scale`; `complex_offdiag`
/// selects complex or purely real couplings.
inline Eigen::MatrixXcd random_hermitian(int n, std::mt19937& rng,
                                         double scale = 1.0,
                                         bool complex_offdiag = false) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = u(rng);
    for (int j = i + 1; j < n; ++j) {
      const Complex value = complex_offdiag
                                ? Complex(u(rng) / 1.4142135623730951,
                                          u(rng) / 1.4142135623730951)
                                : Complex(u(rng), 0.0);
      m(i, j) = value;
      m(j, i) = std::conj(value);
    }
  }
  return m;
}

/// Closed-form eigensystem of the two-site balanced dimer
/// [[i gamma, -J], [-J, -i gamma]]: energies +-sqrt(J^2 - gamma^2).
inline std::vector<Complex> dimer_energies(double gamma, double j) {
  const Complex root = std::sqrt(Complex(j * j - gamma * gamma, 0.0));
  return {root, -root};
}

inline Eigen::VectorXcd dimer_vector(double gamma, double j, Complex energy) {
  Eigen::VectorXcd psi(2);
  psi << Complex(1.0, 0.0), (Complex(0.0, gamma) - energy) / j;
  psi.normalize();
  return psi;
}

}  // namespace oracle
