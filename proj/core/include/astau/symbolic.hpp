#pragma once

// Exact differential algebra over {A, A', C_p} with rational polynomial
// coefficients in s. A is the contour Airy integral (A'' = (s/4) A) and
// C_p = int e^nu/(w - p) dw/(2 pi i) for a pole p in {-1, +1}.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "astau/special_functions.hpp"

namespace astau::sym {

/// Polynomial in s with exact rational coefficients, ascending degree,
/// never carrying a trailing zero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coeffs);
  static RationalPoly constant(const mpq_class& c);
  static RationalPoly monomial(const mpq_class& c, int degree);

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  mpq_class coeff(int k) const;

  RationalPoly derivative() const;
  RationalPoly times_s() const;

  mpq_class evaluate(const mpq_class& s) const;
  double evaluate(double s) const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const mpq_class& k, const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const char* var = "s") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// C' = c_a A + c_c C. For C_p this is {1, p}; for the pole -1 seed it is
/// also sigma_C (A - C) with sigma_C = +1.
struct Closure {
  int c_a = 1;
  int c_c = -1;
  friend bool operator==(const Closure&, const Closure&) = default;
};

Closure closure_for_pole(int pole);
/// C' = sigma (A - C).
Closure closure_from_sigma(int sigma);

/// p(s) A + q(s) A' + r(s) C_pole.
struct SymbolicFunction {
  RationalPoly p, q, r;
  int pole = -1;
  Closure closure = closure_for_pole(-1);

  static SymbolicFunction A(int pole = -1);
  static SymbolicFunction A_prime(int pole = -1);
  static SymbolicFunction C(int pole = -1);

  bool is_zero() const noexcept { return p.is_zero() && q.is_zero() && r.is_zero(); }
  friend SymbolicFunction operator+(const SymbolicFunction& a, const SymbolicFunction& b);
  friend SymbolicFunction operator-(const SymbolicFunction& a, const SymbolicFunction& b);
  friend SymbolicFunction operator*(const mpq_class& k, const SymbolicFunction& f);
  friend bool operator==(const SymbolicFunction& a, const SymbolicFunction& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r && a.pole == b.pole && a.closure == b.closure;
  }
  std::string to_string() const;
};

SymbolicFunction differentiate(const SymbolicFunction& f);
/// s * f
SymbolicFunction times_s(const SymbolicFunction& f);
/// (4 d^2 - s) f
SymbolicFunction apply_airy_operator(const SymbolicFunction& f);
/// (d + pole)^2 f
SymbolicFunction apply_shift_square(const SymbolicFunction& f);

enum class OperatorOrder {
  shift_first,  // (4d^2 - s) (d + p)^2: (d + p)^2 acts first; matches the quadrature oracle
  airy_first,   // (d + p)^2 (4d^2 - s): the order read off the printed recursion
};

/// D~ f = 2 * (composition of (4d^2 - s) and (d + p)^2 in the given order).
SymbolicFunction apply_D_tilde(const SymbolicFunction& f, OperatorOrder order = OperatorOrder::shift_first);

enum class SeedForm {
  derived,   // -(4d^2 - s) C_p, from integrating d_w e^nu by parts
  printed,   // +(4d^2 - s) C
  constant,  // (4d^2 - 1) C
};

/// int chi_0 for the pole-p family, expanded in the algebra.
SymbolicFunction seed_coefficient(int pole = -1, SeedForm form = SeedForm::derived);

enum class CoefficientForm {
  derived,  // [-1/(4p)]^k / (m! n! (k+1)!) D~^k seed, shift_first order
  printed,  // (-1)^k / ((m!)^2 n! (k+1)!) D~^k seed, airy_first order, printed seed
};

struct Coefficient {
  int m = 0;
  int n = 0;
  SymbolicFunction sym;  // multiply by kappa to get alpha_m^n
  int kappa_power = 1;
};

inline constexpr int kMaxCoefficientOrder = 40;

/// alpha_m^n = kappa/(m! n!) int e^nu (w + p)^{m+n}/(w - p)^{m+n+2} dw/(2 pi i).
/// Throws ArgumentError when m + n exceeds kMaxCoefficientOrder.
Coefficient coeff_alpha(int m, int n, int pole = -1, CoefficientForm form = CoefficientForm::derived);
/// beta_n^m, identical to alpha_m^n.
Coefficient coeff_beta(int n, int m, int pole = -1, CoefficientForm form = CoefficientForm::derived);

/// p(s) A(s) + q(s) A'(s) + r(s) C_pole(s): exact rational Horner at s, seeds from
/// extended-precision quadrature, one rounding at the end.
double eval_symfn(const SymbolicFunction& f, double s, const special::SeedConfig& cfg = {});
/// Same, with seeds already computed for this s and f.pole.
double eval_symfn(const SymbolicFunction& f, double s, const special::SeedMoments& seeds);

/// kappa/(m! n!) int_{Re w = -eps} e^nu (w + p)^{m+n}/(w - p)^{m+n+2} dw/(2 pi i),
/// by direct double-precision quadrature. pole p in {-1, +1}.
double alpha_quadrature_oracle(int m, int n, double s, double kappa, int pole = -1,
                               double eps = 0.5, int order = 400, double tail_tol = 1e-18);

}  // namespace astau::sym
