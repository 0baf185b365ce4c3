#pragma once

// Reference computations that share no code with the library routes they check.

#include "astau/special_functions.hpp"

namespace astau::oracle {

/// Ai and Ai' by the Maclaurin series summed in 50-digit binary floating
/// point, with Ai(0) = 1/(3^{2/3} Gamma(2/3)), Ai'(0) = -1/(3^{1/3} Gamma(1/3)).
/// Intended for |x| <= 12.
special::AiryValue airy_series_50(double x);

/// 2^{-2/3} Ai(2^{-2/3} s) through the oracle above.
double scaled_airy(double s);

}  // namespace astau::oracle
