#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lpadm/model.hpp"

namespace lpadm::testing {

// Seeded draws for property tests. Every case is reproducible from (seed, index).
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  // finite diagonal system with real negative eigenvalues
  DiagonalSystem real_diagonal(int n_min, int n_max) {
    const int n = integer(n_min, n_max);
    std::vector<cplx> lam, b;
    for (int i = 0; i < n; ++i) {
      lam.emplace_back(-log_uniform(1e-3, 1e5), 0.0);
      b.emplace_back(uniform(-3.0, 3.0), 0.0);
    }
    DiagonalSystem s;
    s.eigenvalues = IndexFamily::explicit_values(lam);
    s.coefficients = IndexFamily::explicit_values(b);
    s.q = coin() ? 2.0 : uniform(1.2, 4.0);
    return s;
  }

  // same with eigenvalues in a sector around the negative axis
  DiagonalSystem sector_diagonal(int n_min, int n_max) {
    DiagonalSystem s = real_diagonal(n_min, n_max);
    std::vector<cplx> lam = s.eigenvalues.values();
    for (auto& l : lam) l = cplx(l.real(), uniform(-0.9, 0.9) * l.real());
    s.eigenvalues = IndexFamily::explicit_values(lam);
    s.sector_angle = std::atan(0.9);
    return s;
  }

  PowerLawDensitySystem power_law() {
    PowerLawDensitySystem s;
    s.gamma = uniform(-0.9, 0.9);
    s.sigma = coin() ? 0.0 : log_uniform(1e-2, 1e2);
    s.scale = log_uniform(0.1, 10.0);
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lpadm::testing
