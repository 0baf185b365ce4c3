#include "astau/linalg.hpp"

#include <cmath>

#include "astau/errors.hpp"

namespace astau::linalg {

namespace {

template <class Matrix>
LogDet log_determinant_impl(const Matrix& m) {
  LogDet out;
  if (m.rows() != m.cols()) throw ArgumentError("log_determinant: matrix is not square");
  if (m.rows() == 0) return out;
  const Eigen::PartialPivLU<Matrix> lu(m);
  const auto& u = lu.matrixLU();
  std::complex<double> phase = static_cast<double>(lu.permutationP().determinant());
  double log_abs = 0.0;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    const std::complex<double> pivot = u(i, i);
    const double mag = std::abs(pivot);
    if (!(mag > 0.0) || !std::isfinite(mag)) {
      throw NumericalError(NumericalFailure::singular_factorization, "zero or non-finite pivot in LU");
    }
    log_abs += std::log(mag);
    phase *= pivot / mag;
  }
  out.log_abs = log_abs;
  out.phase = phase / std::abs(phase);
  return out;
}

}  // namespace

LogDet log_determinant(const Eigen::MatrixXd& m) { return log_determinant_impl(m); }
LogDet log_determinant(const Eigen::MatrixXcd& m) { return log_determinant_impl(m); }

}  // namespace astau::linalg
