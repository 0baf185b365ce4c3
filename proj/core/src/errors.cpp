#include "astau/errors.hpp"

namespace astau {

const char* to_string(NumericalFailure kind) noexcept {
  switch (kind) {
    case NumericalFailure::non_convergence: return "non-convergence";
    case NumericalFailure::contour_collision: return "contour collision";
    case NumericalFailure::tail_bound: return "tail bound violated";
    case NumericalFailure::singular_factorization: return "singular factorization";
    case NumericalFailure::non_finite: return "non-finite value";
    case NumericalFailure::pole_encountered: return "pole encountered";
    case NumericalFailure::non_positive_tau: return "non-positive tau";
  }
  return "numerical failure";
}

}  // namespace astau
