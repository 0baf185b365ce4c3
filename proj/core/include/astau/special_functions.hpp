#pragma once

// Airy function of real argument, the exponential phase nu(w, s), and the
// contour-integral seeds A, A', C from which every minor-expansion
// coefficient is generated.

#include <complex>

#include "astau/quadrature.hpp"

namespace astau::special {

using cplx = std::complex<double>;

struct AiryValue {
  double ai = 0.0;
  double ai_prime = 0.0;
};

/// Ai(x) and Ai'(x) for finite |x| <= 50.
/// Maclaurin series (extended precision) for |x| <= 8, asymptotic expansions
/// truncated at the smallest term beyond.
AiryValue airy_ai(double x);

namespace detail {
AiryValue airy_maclaurin(double x);
AiryValue airy_asymptotic(double x);
}  // namespace detail

/// Process-wide conventions. sign_nu is read once from ASTAU_NU_SIGN
/// (default +1); every kernel reads the same value.
struct PhaseConvention {
  int sign_nu = +1;
};

const PhaseConvention& phase_convention();

/// nu(w, s) = sign_nu * (s w - (4/3) w^3).
/// With sign_nu = +1: d/dw nu = -(4w^2 - s), d/ds nu = w.
cplx phase_nu(cplx w, double s);
std::complex<long double> phase_nu(std::complex<long double> w, long double s);

/// Contour used by the seed integrals: Re w = -eps.
struct SeedConfig {
  double eps = 0.5;
  int order = 200;
  double tail_tol = 1e-18;
};

/// Moments int e^nu w^j dw/(2 pi i), j = 0,1,2, and int e^nu/(w - pole) dw/(2 pi i)
/// on the left contour, summed in extended precision.
struct SeedMoments {
  long double a = 0;         // A(s)
  long double a_prime = 0;   // A'(s)
  long double a_second = 0;  // A''(s) through the w^2 moment
  long double c = 0;         // C_pole(s)
};

SeedMoments seed_moments(double s, double pole, const SeedConfig& cfg = {});

/// A(s) = int_{Re w = -eps} e^{nu(w,s)} dw/(2 pi i) = 2^{-2/3} Ai(2^{-2/3} s).
double seed_A(double s, const SeedConfig& cfg = {});
double seed_A_prime(double s, const SeedConfig& cfg = {});
double seed_A_second(double s, const SeedConfig& cfg = {});

/// C(s) = int e^{nu(w,s)}/(w + 1) dw/(2 pi i); satisfies C' = sigma_C (A - C).
double seed_C(double s, const SeedConfig& cfg = {});

/// C_p(s) = int e^{nu(w,s)}/(w - p) dw/(2 pi i); satisfies C_p' = A + p C_p.
double seed_C_pole(double s, double pole, const SeedConfig& cfg = {});

/// sigma_C in C' = sigma_C (A - C), chosen by the smaller finite-difference
/// residual over a few probe points. Computed once per process.
int closure_sign();

/// Residual |C'(s) - sigma (A(s) - C(s))| with C' by central differences.
double closure_residual(int sigma, double s, double h = 1e-4, const SeedConfig& cfg = {});

}  // namespace astau::special
