#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace ptchain {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kImag{0.0, 1.0};

/// Failure of a numerical procedure at runtime (solver breakdown, tripped
/// consistency check, horizon violation). Input validation errors use
/// std::invalid_argument / std::domain_error instead; the CLI maps the two
/// families to different exit codes.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptchain
