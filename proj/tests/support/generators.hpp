#pragma once

// Small seeded generators for property tests. Each property draws a fixed
// number of cases from a fixed seed so failures reproduce exactly.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace astau::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  std::complex<double> complex_box(double lo, double hi) { return {real(lo, hi), real(lo, hi)}; }

  // points away from the vertical lines Re z = 0 and Re z = +-eps
  std::complex<double> off_lines(double eps, double margin, double lo, double hi) {
    for (;;) {
      const std::complex<double> z = complex_box(lo, hi);
      if (std::abs(std::abs(z.real()) - eps) > margin && std::abs(z.real()) > margin) return z;
    }
  }

  // distinct sorted odd integers (twice a half-integer) of one sign
  std::vector<int> half_int_set(int count, int max_twice, int sign) {
    std::vector<int> pool;
    for (int t = 1; t <= max_twice; t += 2) pool.push_back(sign * t);
    std::shuffle(pool.begin(), pool.end(), rng_);
    pool.resize(std::min<std::size_t>(count, pool.size()));
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

template <class F>
void for_all(int cases, std::uint64_t seed, F&& body) {
  Gen g(seed);
  for (int i = 0; i < cases; ++i) body(g, i);
}

}  // namespace astau::testing
