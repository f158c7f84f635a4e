#include <gtest/gtest.h>

#include <cmath>

#include "gen.hpp"
#include "lpadm/catalog.hpp"
#include "lpadm/oracle.hpp"

using namespace lpadm;
using lpadm::testing::Gen;

TEST(OracleProps, SingleModeMatchesMidpointRule) {
  Gen g(41);
  for (int c = 0; c < 100; ++c) {
    const double l = -g.log_uniform(1e-2, 5.0), rate = g.log_uniform(1e-2, 5.0), t = g.uniform(0.1, 5.0);
    DiagonalSystem s;
    s.eigenvalues = IndexFamily::explicit_values({l});
    s.coefficients = IndexFamily::explicit_values({1.0});
    const int n = 10'000;
    const double h = t / n;
    double mid = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = (i + 0.5) * h;
      mid += std::exp(l * (t - x)) * std::exp(-rate * x);
    }
    mid *= h;
    EXPECT_NEAR(state_response(s, TestInput::exponential(rate), t).norm, mid, 1e-6 * mid) << c;
  }
}

TEST(OracleProps, ResolventLowerBound) {
  Gen g(42);
  for (int c = 0; c < 60; ++c) {
    const auto s = g.real_diagonal(1, 30);
    const double p = g.uniform(1.1, 6.0);
    const double lambda = g.log_uniform(1e-1, 1e3);
    const double t = 80.0 / lambda + 1.0;
    double res = 0.0;
    for (std::int64_t k = s.first_index; k <= s.last_index(); ++k)
      res += std::pow(std::abs(s.b(k)) / std::abs(lambda - s.lambda(k)), s.q);
    const double bound = std::pow(lambda * p, 1.0 / p) * std::pow(res, 1.0 / s.q);
    const double got = admissibility_constant(s, p, t, {TestInput::exponential(lambda).mirror()});
    EXPECT_GE(got, bound * (1 - 1e-9)) << c;
    EXPECT_NEAR(got, bound, 1e-6 * bound) << c;
  }
}

TEST(OracleProps, ProfilesMonotone) {
  Gen g(43);
  for (int c = 0; c < 12; ++c) {
    const auto s = g.real_diagonal(1, 20);
    const auto prof = constant_growth_profile(s, g.uniform(1.1, 6.0), dyadic_times(256.0));
    for (std::size_t i = 1; i < prof.constants.size(); ++i) EXPECT_GE(prof.constants[i], prof.constants[i - 1]) << c;
  }
  const auto heat = std::get<DiagonalSystem>(catalog_system("heat1d-dirichlet").system);
  for (double p : {1.5, 2.5, 4.0, 6.0}) {
    const auto prof = constant_growth_profile(heat, p, dyadic_times(1024.0));
    for (std::size_t i = 1; i < prof.constants.size(); ++i) EXPECT_GE(prof.constants[i], prof.constants[i - 1]) << p;
  }
}

TEST(OracleProps, WeissSupBelowHalf) {
  double sup = 0.0;
  for (int i = 0; i < 200; ++i) sup = std::max(sup, weiss_closed_form(std::pow(10.0, -3.0 + 9.0 * i / 199.0)));
  EXPECT_LE(sup, 0.5 + 1e-12);
  EXPECT_GT(sup, 0.5 - 1e-12);
  for (double mu = 0.1; mu <= 10.0; mu *= 1.5) EXPECT_NEAR(weiss_closed_form(mu), weiss_truncated_sum(mu), 1e-8) << mu;
}
