#include "selftest/oracles.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace astau::oracle {

using big = boost::multiprecision::cpp_bin_float_50;

special::AiryValue airy_series_50(double xd) {
  const big x = xd;
  static const big third = big(1) / 3;
  static const big ai0 = 1 / (pow(big(3), 2 * third) * boost::math::tgamma(2 * third));
  static const big aip0 = -1 / (pow(big(3), third) * boost::math::tgamma(third));
  // f = sum a_k x^{3k}, g = sum b_k x^{3k+1}; xk = x^{3k}
  const big x3 = x * x * x;
  big a = 1, b = 1, xk = 1, xprev = 0;
  big f = 0, g = 0, fp = 0, gp = 0;
  const big tiny = std::numeric_limits<big>::epsilon();
  for (int k = 0; k < 500; ++k) {
    const big tf = a * xk;
    const big tg = b * xk * x;
    f += tf;
    g += tg;
    // x^{3k-1} = x^{3(k-1)} x^2
    if (k > 0) fp += 3 * k * a * xprev * x * x;
    gp += (3 * k + 1) * b * xk;
    if (k > 5 && abs(tf) + abs(tg) < tiny * (abs(f) + abs(g)) * 1e-6) break;
    a /= (3 * k + 2) * (3 * k + 3);
    b /= (3 * k + 3) * (3 * k + 4);
    xprev = xk;
    xk *= x3;
  }
  special::AiryValue out;
  out.ai = static_cast<double>(ai0 * f + aip0 * g);
  out.ai_prime = static_cast<double>(ai0 * fp + aip0 * gp);
  return out;
}

double scaled_airy(double s) {
  const double c = std::pow(2.0, -2.0 / 3.0);
  return c * airy_series_50(c * s).ai;
}

}  // namespace astau::oracle
