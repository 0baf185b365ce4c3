#pragma once

// Log-space determinants of dense matrices via pivoted LU.

#include <Eigen/Dense>
#include <complex>

namespace astau::linalg {

/// det = phase * exp(log_abs); phase has modulus 1 (or is 0 for a singular matrix).
struct LogDet {
  double log_abs = 0.0;
  std::complex<double> phase{1.0, 0.0};

  std::complex<double> value() const { return phase * std::exp(log_abs); }
};

/// Throws NumericalError(singular_factorization) when a pivot vanishes.
LogDet log_determinant(const Eigen::MatrixXd& m);
LogDet log_determinant(const Eigen::MatrixXcd& m);

}  // namespace astau::linalg
