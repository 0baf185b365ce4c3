#include "astau/symbolic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "astau/errors.hpp"
#include "astau/quadrature.hpp"

namespace astau::sym {

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(const mpq_class& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const mpq_class& c, int degree) {
  std::vector<mpq_class> v(degree + 1, mpq_class(0));
  v[degree] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RationalPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long>(k);
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::times_s() const {
  if (c_.empty()) return {};
  std::vector<mpq_class> v(c_.size() + 1, mpq_class(0));
  for (std::size_t k = 0; k < c_.size(); ++k) v[k + 1] = c_[k];
  return RationalPoly(std::move(v));
}

mpq_class RationalPoly::evaluate(const mpq_class& s) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

double RationalPoly::evaluate(double s) const { return evaluate(mpq_class(s)).get_d(); }

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + mpq_class(-1) * b; }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const mpq_class& k, const RationalPoly& a) {
  if (k == 0) return {};
  std::vector<mpq_class> v = a.c_;
  for (auto& c : v) c *= k;
  return RationalPoly(std::move(v));
}

std::string RationalPoly::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    mpq_class c = c_[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    const bool unit = c == 1 && k > 0;
    if (!unit) os << c.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Closure closure_for_pole(int pole) {
  if (pole != -1 && pole != 1) throw ArgumentError("seed pole must be -1 or +1");
  return {1, pole};
}

Closure closure_from_sigma(int sigma) {
  if (sigma != -1 && sigma != 1) throw ArgumentError("sigma_C must be -1 or +1");
  return {sigma, -sigma};
}

SymbolicFunction SymbolicFunction::A(int pole) {
  SymbolicFunction f;
  f.p = RationalPoly::constant(1);
  f.pole = pole;
  f.closure = closure_for_pole(pole);
  return f;
}

SymbolicFunction SymbolicFunction::A_prime(int pole) {
  SymbolicFunction f;
  f.q = RationalPoly::constant(1);
  f.pole = pole;
  f.closure = closure_for_pole(pole);
  return f;
}

SymbolicFunction SymbolicFunction::C(int pole) {
  SymbolicFunction f;
  f.r = RationalPoly::constant(1);
  f.pole = pole;
  f.closure = closure_for_pole(pole);
  return f;
}

namespace {

void check_compatible(const SymbolicFunction& a, const SymbolicFunction& b) {
  if (a.pole != b.pole || !(a.closure == b.closure)) {
    throw ArgumentError("symbolic functions over different seeds cannot be combined");
  }
}

SymbolicFunction with_parts(const SymbolicFunction& like, RationalPoly p, RationalPoly q, RationalPoly r) {
  SymbolicFunction out;
  out.p = std::move(p);
  out.q = std::move(q);
  out.r = std::move(r);
  out.pole = like.pole;
  out.closure = like.closure;
  return out;
}

}  // namespace

SymbolicFunction operator+(const SymbolicFunction& a, const SymbolicFunction& b) {
  check_compatible(a, b);
  return with_parts(a, a.p + b.p, a.q + b.q, a.r + b.r);
}

SymbolicFunction operator-(const SymbolicFunction& a, const SymbolicFunction& b) {
  check_compatible(a, b);
  return with_parts(a, a.p - b.p, a.q - b.q, a.r - b.r);
}

SymbolicFunction operator*(const mpq_class& k, const SymbolicFunction& f) {
  return with_parts(f, k * f.p, k * f.q, k * f.r);
}

std::string SymbolicFunction::to_string() const {
  std::ostringstream os;
  os << "(" << p.to_string() << ")*A + (" << q.to_string() << ")*A' + (" << r.to_string() << ")*C";
  return os.str();
}

SymbolicFunction differentiate(const SymbolicFunction& f) {
  // d(pA + qA' + rC) = (p' + (s/4) q + c_a r) A + (p + q') A' + (r' + c_c r) C
  const mpq_class quarter(1, 4);
  RationalPoly p = f.p.derivative() + quarter * f.q.times_s() + mpq_class(f.closure.c_a) * f.r;
  RationalPoly q = f.p + f.q.derivative();
  RationalPoly r = f.r.derivative() + mpq_class(f.closure.c_c) * f.r;
  return with_parts(f, std::move(p), std::move(q), std::move(r));
}

SymbolicFunction times_s(const SymbolicFunction& f) {
  return with_parts(f, f.p.times_s(), f.q.times_s(), f.r.times_s());
}

SymbolicFunction apply_airy_operator(const SymbolicFunction& f) {
  return mpq_class(4) * differentiate(differentiate(f)) - times_s(f);
}

SymbolicFunction apply_shift_square(const SymbolicFunction& f) {
  const mpq_class p(f.pole);
  const SymbolicFunction d1 = differentiate(f);
  // (d + p)^2 = d^2 + 2p d + p^2
  return differentiate(d1) + mpq_class(2) * p * d1 + p * p * f;
}

SymbolicFunction apply_D_tilde(const SymbolicFunction& f, OperatorOrder order) {
  const SymbolicFunction g = order == OperatorOrder::shift_first ? apply_airy_operator(apply_shift_square(f))
                                                                 : apply_shift_square(apply_airy_operator(f));
  return mpq_class(2) * g;
}

SymbolicFunction seed_coefficient(int pole, SeedForm form) {
  SymbolicFunction c = SymbolicFunction::C(pole);
  if (pole == -1) c.closure = closure_from_sigma(special::closure_sign());
  switch (form) {
    case SeedForm::derived: return mpq_class(-1) * apply_airy_operator(c);
    case SeedForm::printed: return apply_airy_operator(c);
    case SeedForm::constant: {
      const SymbolicFunction c2 = differentiate(differentiate(c));
      return mpq_class(4) * c2 - c;
    }
  }
  return c;
}

namespace {

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// D~^k(seed), memoised per (pole, form).
SymbolicFunction d_tilde_power(int pole, CoefficientForm form, int k) {
  static std::mutex mu;
  static std::map<std::tuple<int, int>, std::vector<SymbolicFunction>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& powers = cache[{pole, static_cast<int>(form)}];
  const bool printed = form == CoefficientForm::printed;
  if (powers.empty()) powers.push_back(seed_coefficient(pole, printed ? SeedForm::printed : SeedForm::derived));
  const auto order = printed ? OperatorOrder::airy_first : OperatorOrder::shift_first;
  while (static_cast<int>(powers.size()) <= k) powers.push_back(apply_D_tilde(powers.back(), order));
  return powers[k];
}

}  // namespace

Coefficient coeff_alpha(int m, int n, int pole, CoefficientForm form) {
  if (m < 0 || n < 0) throw ArgumentError("coefficient indices must be nonnegative");
  if (m + n > kMaxCoefficientOrder) {
    throw ArgumentError("coefficient order m + n = " + std::to_string(m + n) + " exceeds " +
                        std::to_string(kMaxCoefficientOrder));
  }
  closure_for_pole(pole);
  const int k = m + n;
  mpq_class prefactor;
  if (form == CoefficientForm::derived) {
    // (-1/(4p))^k
    mpz_class den = 1;
    for (int j = 0; j < k; ++j) den *= 4;
    const int sign = ((k % 2 == 1) && pole == 1) ? -1 : 1;
    prefactor = mpq_class(mpz_class(sign), den * factorial(m) * factorial(n) * factorial(k + 1));
  } else {
    const mpz_class fm = factorial(m);
    prefactor = mpq_class(mpz_class(k % 2 == 0 ? 1 : -1), fm * fm * factorial(n) * factorial(k + 1));
  }
  prefactor.canonicalize();
  Coefficient c;
  c.m = m;
  c.n = n;
  c.sym = prefactor * d_tilde_power(pole, form, k);
  return c;
}

Coefficient coeff_beta(int n, int m, int pole, CoefficientForm form) {
  Coefficient c = coeff_alpha(m, n, pole, form);
  c.m = m;
  c.n = n;
  return c;
}

namespace {

long double to_long_double(const mpq_class& q) {
  const double hi = q.get_d();
  const mpq_class rest = q - mpq_class(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

}  // namespace

double eval_symfn(const SymbolicFunction& f, double s, const special::SeedConfig& cfg) {
  if (f.is_zero()) return 0.0;
  return eval_symfn(f, s, special::seed_moments(s, static_cast<double>(f.pole), cfg));
}

double eval_symfn(const SymbolicFunction& f, double s, const special::SeedMoments& seeds) {
  if (f.is_zero()) return 0.0;
  const mpq_class sq(s);
  const long double v = to_long_double(f.p.evaluate(sq)) * seeds.a + to_long_double(f.q.evaluate(sq)) * seeds.a_prime +
                        to_long_double(f.r.evaluate(sq)) * seeds.c;
  return static_cast<double>(v);
}

double alpha_quadrature_oracle(int m, int n, double s, double kappa, int pole, double eps, int order, double tail_tol) {
  if (m < 0 || n < 0) throw ArgumentError("alpha_quadrature_oracle: indices must be nonnegative");
  if (m + n > 12) throw ArgumentError("alpha_quadrature_oracle: m + n must not exceed 12");
  closure_for_pole(pole);
  if (std::abs(eps + pole) < 1e-12) {
    throw NumericalError(NumericalFailure::contour_collision, "alpha_quadrature_oracle: contour passes through the pole");
  }
  if (kappa == 0.0) return 0.0;
  const auto c = quad::vertical_contour(quad::Side::left, eps, s, order, tail_tol);
  const int k = m + n;
  const double p = pole;
  const auto v = quad::contour_integral(
      [&](quad::cplx w) {
        return std::exp(special::phase_nu(w, s)) * std::pow(w + p, k) / std::pow(w - p, k + 2);
      },
      c);
  double fact = 1;
  for (int j = 2; j <= m; ++j) fact *= j;
  for (int j = 2; j <= n; ++j) fact *= j;
  return kappa * v.real() / fact;
}

}  // namespace astau::sym
