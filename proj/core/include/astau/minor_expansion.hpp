#pragma once

// Maya diagrams, their Young diagrams, and the minor expansion of
// det(I - A^ B^) over balanced particle/hole configurations.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "astau/special_functions.hpp"
#include "astau/tau_result.hpp"

namespace astau::minor {

using cplx = std::complex<double>;

/// A half-integer stored as twice its value (always odd).
struct HalfInt {
  int twice = 1;

  static HalfInt from_twice(int t);
  double value() const noexcept { return 0.5 * twice; }
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

/// Particles on the positive half-integers, holes on the negative ones.
/// Both lists are kept strictly increasing.
struct MayaDiagram {
  std::vector<HalfInt> particles;
  std::vector<HalfInt> holes;

  /// Validates signs and sorts; throws ArgumentError on a malformed diagram.
  static MayaDiagram make(std::vector<HalfInt> particles, std::vector<HalfInt> holes);

  bool balanced() const noexcept { return particles.size() == holes.size(); }
  /// Sum of |position| over particles and holes.
  double weight() const noexcept;
  friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;
};

struct YoungDiagram {
  std::vector<int> rows;  // weakly decreasing, positive
  int size() const noexcept;
  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

/// Walk the lattice upward: each filled site (a particle, or a negative site
/// that is not a hole) contributes a row equal to the number of empty sites below it.
YoungDiagram maya_to_young(const MayaDiagram& d);

/// All balanced diagrams with |p| = |h| = k <= max_k and |position| <= max_pos.
std::vector<MayaDiagram> enumerate_maya(int max_k, HalfInt max_pos);

enum class BasisSign { plus, minus };

/// e+^n(z) = (i/n!) ((1+z)/(z-1))^n / (z-1),  e-^n(z) = (i/n!) ((z-1)/(z+1))^n / (z+1).
cplx basis_fn(BasisSign sign, int n, cplx z);

/// <e^n, e^m> = int_{iR} e^n conj(e^m) dz/(2 pi i), by quadrature on the whole axis.
double gram_entry(BasisSign sign, int n, int m, int order = 200);
double gram_diag(BasisSign sign, int n, int order = 200);

enum class CoefficientSource { symbolic, quadrature };

struct MinorConfig {
  int n_cut = 8;
  int max_weight = 8;           // kUnboundedWeight keeps every minor inside n_cut
  int pole = +1;                // +1 pairs a12 with the Hardy basis; -1 is the literal printed family
  CoefficientSource source = CoefficientSource::symbolic;
  bool gram_corrected = true;
  int gram_order = 200;
  int quad_order = 400;         // quadrature source only
  special::SeedConfig seeds;
};

inline constexpr int kUnboundedWeight = 1 << 30;

struct CoefficientTable {
  int n_cut = 0;
  double s = 0.0;
  double kappa = 0.0;
  Eigen::MatrixXd alpha;  // alpha(m, n) = alpha_m^n
  Eigen::MatrixXd beta;   // beta(n, m) = beta_n^m
  std::vector<double> gram_plus;
  std::vector<double> gram_minus;
  bool gram_corrected = true;

  Eigen::MatrixXd a_hat() const;
  Eigen::MatrixXd b_hat() const;
};

CoefficientTable coefficient_table(double s, double kappa, const MinorConfig& cfg = {});

/// One signed Cauchy–Binet term (-1)^k det A^[S,T] det B^[T,S], labelled by
/// the diagram with particles at m + 1/2 (m in S) and holes at -(n + 1/2) (n in T).
struct MinorTerm {
  MayaDiagram diagram;
  double value = 0.0;
};

/// All terms with indices < n_cut and weight <= max_weight, in order of
/// increasing k, then lexicographic particle and hole index sets.
std::vector<MinorTerm> minor_terms(const CoefficientTable& table, int max_weight);

/// Signed Cauchy–Binet sum over balanced diagrams with indices < n_cut and
/// weight <= max_weight.
TauResult tau_minor(double s, double kappa, const MinorConfig& cfg = {});
TauResult tau_minor(const CoefficientTable& table, int max_weight);

/// det(I - A^ B^) on the n_cut truncation.
double tau_truncated_det(double s, double kappa, const MinorConfig& cfg = {});
double tau_truncated_det(const CoefficientTable& table);

}  // namespace astau::minor
