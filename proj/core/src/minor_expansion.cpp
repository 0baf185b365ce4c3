#include "astau/minor_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "astau/errors.hpp"
#include "astau/linalg.hpp"
#include "astau/quadrature.hpp"
#include "astau/symbolic.hpp"

namespace astau::minor {

HalfInt HalfInt::from_twice(int t) {
  if (t % 2 == 0) throw ArgumentError("half-integer lattice sites have odd doubled value, got " + std::to_string(t));
  return HalfInt{t};
}

MayaDiagram MayaDiagram::make(std::vector<HalfInt> particles, std::vector<HalfInt> holes) {
  for (const auto& p : particles) {
    if (p.twice <= 0 || p.twice % 2 == 0) throw ArgumentError("particles sit on positive half-integers");
  }
  for (const auto& h : holes) {
    if (h.twice >= 0 || h.twice % 2 == 0) throw ArgumentError("holes sit on negative half-integers");
  }
  std::sort(particles.begin(), particles.end());
  std::sort(holes.begin(), holes.end());
  if (std::adjacent_find(particles.begin(), particles.end()) != particles.end() ||
      std::adjacent_find(holes.begin(), holes.end()) != holes.end()) {
    throw ArgumentError("repeated position in Maya diagram");
  }
  return MayaDiagram{std::move(particles), std::move(holes)};
}

double MayaDiagram::weight() const noexcept {
  int twice = 0;
  for (const auto& p : particles) twice += p.twice;
  for (const auto& h : holes) twice -= h.twice;
  return 0.5 * twice;
}

int YoungDiagram::size() const noexcept {
  int n = 0;
  for (int r : rows) n += r;
  return n;
}

YoungDiagram maya_to_young(const MayaDiagram& d) {
  YoungDiagram y;
  if (d.particles.empty() && d.holes.empty()) return y;
  // sites below the lowest hole are all filled with no empty site beneath,
  // sites above the highest particle are empty: both add nothing
  int lo = d.holes.empty() ? 1 : d.holes.front().twice;
  int hi = d.particles.empty() ? -1 : d.particles.back().twice;
  int empty_below = 0;
  std::size_t ip = 0, ih = 0;
  for (int t = lo; t <= hi; t += 2) {
    bool filled;
    if (t < 0) {
      const bool is_hole = ih < d.holes.size() && d.holes[ih].twice == t;
      if (is_hole) ++ih;
      filled = !is_hole;
    } else {
      const bool is_particle = ip < d.particles.size() && d.particles[ip].twice == t;
      if (is_particle) ++ip;
      filled = is_particle;
    }
    if (filled) {
      if (empty_below > 0) y.rows.push_back(empty_below);
    } else {
      ++empty_below;
    }
  }
  std::sort(y.rows.begin(), y.rows.end(), std::greater<>());
  return y;
}

std::vector<MayaDiagram> enumerate_maya(int max_k, HalfInt max_pos) {
  if (max_k < 0 || max_k > 6) throw ArgumentError("enumerate_maya: max_k must lie in [0, 6]");
  if (max_pos.twice < 1 || max_pos.twice > 21) throw ArgumentError("enumerate_maya: max_pos must lie in [1/2, 21/2]");
  const int sites = (max_pos.twice + 1) / 2;
  std::vector<std::vector<std::vector<int>>> subsets(max_k + 1);
  // index subsets of {0..sites-1} of each size
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) <= max_k) subsets[cur.size()].push_back(cur);
    if (static_cast<int>(cur.size()) == max_k) return;
    for (int i = start; i < sites; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::vector<MayaDiagram> out;
  for (int k = 0; k <= max_k; ++k) {
    for (const auto& ps : subsets[k]) {
      for (const auto& hs : subsets[k]) {
        MayaDiagram d;
        for (int i : ps) d.particles.push_back(HalfInt{2 * i + 1});
        for (auto it = hs.rbegin(); it != hs.rend(); ++it) d.holes.push_back(HalfInt{-(2 * *it + 1)});
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

cplx basis_fn(BasisSign sign, int n, cplx z) {
  if (n < 0) throw ArgumentError("basis_fn: n must be nonnegative");
  const cplx pole = sign == BasisSign::plus ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
  if (z == pole) throw NumericalError(NumericalFailure::pole_encountered, "basis_fn evaluated at its pole");
  const cplx ratio = sign == BasisSign::plus ? (1.0 + z) / (z - 1.0) : (z - 1.0) / (z + 1.0);
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  return cplx(0.0, 1.0 / fact) * std::pow(ratio, n) / (z - pole);
}

double gram_entry(BasisSign sign, int n, int m, int order) {
  const auto axis = quad::imaginary_axis_rule(order);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < axis.nodes.size(); ++j) {
    const cplx z = axis.nodes[j];
    acc += basis_fn(sign, n, z) * std::conj(basis_fn(sign, m, z)) * axis.weights[j];
  }
  acc /= quad::two_pi_i;
  return n == m ? acc.real() : std::abs(acc);
}

double gram_diag(BasisSign sign, int n, int order) { return gram_entry(sign, n, n, order); }

Eigen::MatrixXd CoefficientTable::a_hat() const {
  Eigen::MatrixXd a = alpha;
  if (gram_corrected) {
    for (int m = 0; m < n_cut; ++m) a.row(m) /= gram_plus[m];
  }
  return a;
}

Eigen::MatrixXd CoefficientTable::b_hat() const {
  Eigen::MatrixXd b = beta;
  if (gram_corrected) {
    for (int n = 0; n < n_cut; ++n) b.row(n) /= gram_minus[n];
  }
  return b;
}

namespace {

void check_args(double s, double kappa, int n_cut) {
  if (!std::isfinite(s) || !std::isfinite(kappa)) throw ArgumentError("minor expansion: non-finite argument");
  if (std::abs(kappa) > 1.0) throw ArgumentError("minor expansion: |kappa| must not exceed 1");
  if (n_cut < 1 || n_cut > 64) throw ArgumentError("minor expansion: n_cut must lie in [1, 64]");
}

// J_k = int_left e^nu (w + p)^k / (w - p)^{k+2} dw/(2 pi i)
double j_quadrature(int k, double s, int pole, int order, double eps, double tail_tol) {
  const auto c = quad::vertical_contour(quad::Side::left, eps, s, order, tail_tol);
  const double p = pole;
  return quad::contour_integral(
             [&](quad::cplx w) { return std::exp(special::phase_nu(w, s)) * std::pow((w + p) / (w - p), k) / ((w - p) * (w - p)); },
             c)
      .real();
}

}  // namespace

CoefficientTable coefficient_table(double s, double kappa, const MinorConfig& cfg) {
  check_args(s, kappa, cfg.n_cut);
  const int n = cfg.n_cut;
  CoefficientTable t;
  t.n_cut = n;
  t.s = s;
  t.kappa = kappa;
  t.gram_corrected = cfg.gram_corrected;
  t.alpha = Eigen::MatrixXd::Zero(n, n);
  t.beta = Eigen::MatrixXd::Zero(n, n);
  t.gram_plus.resize(n);
  t.gram_minus.resize(n);
  for (int i = 0; i < n; ++i) {
    t.gram_plus[i] = gram_diag(BasisSign::plus, i, cfg.gram_order);
    t.gram_minus[i] = gram_diag(BasisSign::minus, i, cfg.gram_order);
  }
  if (kappa == 0.0) return t;

  if (cfg.source == CoefficientSource::symbolic) {
    if (2 * (n - 1) > sym::kMaxCoefficientOrder) {
      throw ArgumentError("symbolic coefficients support n_cut <= " + std::to_string(sym::kMaxCoefficientOrder / 2 + 1));
    }
    const auto seeds = special::seed_moments(s, cfg.pole, cfg.seeds);
    for (int m = 0; m < n; ++m) {
      for (int k = 0; k < n; ++k) {
        t.alpha(m, k) = kappa * sym::eval_symfn(sym::coeff_alpha(m, k, cfg.pole).sym, s, seeds);
      }
    }
  } else {
    std::vector<double> j(2 * n - 1);
    for (int k = 0; k < 2 * n - 1; ++k) j[k] = j_quadrature(k, s, cfg.pole, cfg.quad_order, cfg.seeds.eps, cfg.seeds.tail_tol);
    std::vector<double> fact(n, 1.0);
    for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
    for (int m = 0; m < n; ++m) {
      for (int k = 0; k < n; ++k) t.alpha(m, k) = kappa * j[m + k] / (fact[m] * fact[k]);
    }
  }
  // beta_n^m = alpha_m^n
  t.beta = t.alpha.transpose();
  return t;
}

std::vector<MinorTerm> minor_terms(const CoefficientTable& table, int max_weight) {
  if (max_weight < 0) throw ArgumentError("minor expansion: max_weight must be nonnegative");
  const Eigen::MatrixXd a = table.a_hat();
  const Eigen::MatrixXd b = table.b_hat();
  const int n = table.n_cut;
  const long budget = max_weight >= kUnboundedWeight / 2 ? (1L << 40) : 2L * max_weight;

  // index subsets of {0..n-1} whose doubled weight sum(2i + 1) fits the budget
  struct Subset {
    std::vector<int> idx;
    long weight_twice;
  };
  std::vector<Subset> subsets;
  std::vector<int> cur;
  std::function<void(int, long)> rec = [&](int start, long w) {
    subsets.push_back({cur, w});
    for (int i = start; i < n; ++i) {
      const long nw = w + 2 * i + 1;
      if (nw > budget) break;
      cur.push_back(i);
      rec(i + 1, nw);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const Subset& x, const Subset& y) { return x.idx.size() < y.idx.size(); });

  auto minor_det = [](const Eigen::MatrixXd& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    const auto k = static_cast<Eigen::Index>(rows.size());
    if (k == 0) return 1.0;
    if (k == 1) return m(rows[0], cols[0]);
    Eigen::MatrixXd sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
    }
    return sub.partialPivLu().determinant();
  };

  std::vector<MinorTerm> terms;
  for (const auto& p : subsets) {
    for (const auto& h : subsets) {
      if (h.idx.size() != p.idx.size() || p.weight_twice + h.weight_twice > budget) continue;
      MinorTerm t;
      for (int i : p.idx) t.diagram.particles.push_back(HalfInt{2 * i + 1});
      for (auto it = h.idx.rbegin(); it != h.idx.rend(); ++it) t.diagram.holes.push_back(HalfInt{-(2 * *it + 1)});
      const double sign = p.idx.size() % 2 == 0 ? 1.0 : -1.0;
      t.value = sign * minor_det(a, p.idx, h.idx) * minor_det(b, h.idx, p.idx);
      terms.push_back(std::move(t));
    }
  }
  return terms;
}

TauResult tau_minor(const CoefficientTable& table, int max_weight) {
  TauResult r;
  r.method = Method::minor;
  r.s = table.s;
  r.kappa = table.kappa;
  r.config.max_weight = max_weight;
  r.config.n_cut = table.n_cut;

  std::map<double, double> shells;  // total contribution per weight
  double total = 0.0;
  for (const auto& t : minor_terms(table, max_weight)) {
    shells[t.diagram.weight()] += t.value;
    total += t.value;
  }
  r.value = total;
  if (!shells.empty() && shells.rbegin()->first > 0) {
    const double outer = std::abs(shells.rbegin()->second);
    r.error_estimate = outer;
    if (outer > 1e-6 * std::abs(total)) {
      r.warnings.push_back("minor expansion truncation: outermost weight shell contributes " + std::to_string(outer));
    }
  }
  return r;
}

TauResult tau_minor(double s, double kappa, const MinorConfig& cfg) {
  auto r = tau_minor(coefficient_table(s, kappa, cfg), cfg.max_weight);
  r.config.eps = cfg.seeds.eps;
  r.config.quad_order = cfg.seeds.order;
  r.config.tail_tol = cfg.seeds.tail_tol;
  return r;
}

double tau_truncated_det(const CoefficientTable& table) {
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(table.n_cut, table.n_cut) - table.a_hat() * table.b_hat();
  return linalg::log_determinant(m).value().real();
}

double tau_truncated_det(double s, double kappa, const MinorConfig& cfg) {
  return tau_truncated_det(coefficient_table(s, kappa, cfg));
}

}  // namespace astau::minor
