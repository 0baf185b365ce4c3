#pragma once

#include <string>
#include <vector>

namespace astau {

enum class Method { airy, widom, minor };

const char* to_string(Method m) noexcept;
/// Throws ArgumentError for anything other than "airy", "widom", "minor".
Method parse_method(const std::string& name);

/// Numerical settings that produced a TauResult.
struct ConfigSnapshot {
  int quad_order = 0;
  double truncation = 0.0;  // airy: half-line length T
  double eps = 0.0;         // widom/minor: contour shift
  double tail_tol = 0.0;
  int max_weight = 0;
  int n_cut = 0;
  double calibration = 0.0;
};

/// A tau value from one of the three pipelines.
struct TauResult {
  double value = 1.0;
  double imag_residual = 0.0;
  Method method = Method::airy;
  double s = 0.0;
  double kappa = 0.0;
  double error_estimate = 0.0;
  ConfigSnapshot config;
  std::vector<std::string> warnings;
};

}  // namespace astau
