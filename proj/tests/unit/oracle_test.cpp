#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lpadm/catalog.hpp"
#include "lpadm/errors.hpp"
#include "lpadm/oracle.hpp"

using namespace lpadm;

namespace {
constexpr double kPi = std::numbers::pi;

const DiagonalSystem& heat() {
  static const DiagonalSystem s = std::get<DiagonalSystem>(catalog_system("heat1d-dirichlet").system);
  return s;
}

DiagonalSystem single_mode(double b = 1.0) {
  DiagonalSystem s;
  s.eigenvalues = IndexFamily::explicit_values({-1.0});
  s.coefficients = IndexFamily::explicit_values({b});
  return s;
}
}  // namespace

TEST(StateResponse, SingleModeIndicator) {
  for (double t : {0.5, 1.0, 4.0}) {
    auto r = state_response(single_mode(), TestInput::indicator(t), t);
    EXPECT_NEAR(r.norm, 1.0 - std::exp(-t), 1e-15) << t;
    EXPECT_TRUE(r.certified);
  }
}

TEST(StateResponse, ZeroInput) {
  auto r = state_response(heat(), TestInput::piecewise({0.0, 1.0}, {0.0}), 1.0);
  EXPECT_EQ(r.norm, 0.0);
}

TEST(StateResponse, ResonantRateUsesLimit) {
  // rate 1 against lambda = -1: int_0^t e^{-(t-s)} e^{-s} ds = t e^{-t}
  auto r = state_response(single_mode(), TestInput::exponential(1.0), 2.0);
  EXPECT_NEAR(r.norm, 2.0 * std::exp(-2.0), 1e-15);
}

TEST(StateResponse, Heat1dExponentialAtOne) {
  long double s = 0;
  const long K = 2'000'000;
  for (long k = K; k >= 1; --k) {
    const long double l = (long double)k * k * kPi * kPi;
    const long double v = (std::exp(-1.0L) - std::exp(-l)) / (1.0L - l);
    s += 2.0L * l * v * v;
  }
  // remainder: terms ~ 2 e^{-2} / (pi^2 k^2)
  s += 2.0L * std::exp(-2.0L) / (kPi * kPi * (K + 0.5L));
  auto r = state_response(heat(), TestInput::exponential(1.0), 1.0);
  EXPECT_TRUE(r.certified);
  EXPECT_NEAR(r.norm, std::sqrt(double(s)), 1e-10);
  EXPECT_LT(r.tail_error, 1e-12);
}

TEST(AdmissibilityConstant, SingleModeAtTwo) {
  // Cauchy-Schwarz gives exactly ||e^{-s}||_2 = 1/sqrt2 as t grows
  const double c = admissibility_constant(single_mode(), 2.0, 50.0);
  EXPECT_LE(c, std::sqrt(0.5) + 1e-12);
  EXPECT_GT(c, std::sqrt(0.5) - 1e-3);
  const double e = admissibility_constant(single_mode(), 2.0, 50.0, {TestInput::exponential(1.0).mirror()});
  EXPECT_NEAR(e, std::sqrt(0.5), 1e-9);
}

TEST(AdmissibilityConstant, ZeroColumn) {
  EXPECT_EQ(admissibility_constant(single_mode(0.0), 2.0, 5.0), 0.0);
}

TEST(AdmissibilityConstant, Heat1dStableUnderDoubling) {
  const double a = admissibility_constant(heat(), 5.0, 10.0, OracleOptions{.k_max = 20'000});
  const double b = admissibility_constant(heat(), 5.0, 10.0, OracleOptions{.k_max = 40'000});
  EXPECT_TRUE(std::isfinite(a));
  EXPECT_NEAR(a, b, 1e-6 * b);
}

TEST(Profile, Heat1dDichotomy) {
  const auto times = dyadic_times(1024.0);
  ASSERT_EQ(times.size(), 11u);
  auto at5 = constant_growth_profile(heat(), 5.0, times);
  EXPECT_EQ(at5.classification, ProfileClass::Plateau);
  auto at3 = constant_growth_profile(heat(), 3.0, times);
  EXPECT_EQ(at3.classification, ProfileClass::Growing);
  EXPECT_TRUE(at5.certified && at3.certified);
}

TEST(Profile, ZeroColumnPlateausAtZero) {
  auto prof = constant_growth_profile(single_mode(0.0), 3.0, dyadic_times(64.0));
  EXPECT_EQ(prof.classification, ProfileClass::Plateau);
  for (double c : prof.constants) EXPECT_EQ(c, 0.0);
}

TEST(Profile, SinglePointIsInconclusive) {
  auto prof = constant_growth_profile(heat(), 5.0, dyadic_times(1.0));
  EXPECT_EQ(prof.times.size(), 1u);
  EXPECT_EQ(prof.classification, ProfileClass::Inconclusive);
}

TEST(WeissClosedForm, Values) {
  // reference values from 40-digit evaluation of (coth mu - mu csch^2 mu)/2
  EXPECT_NEAR(weiss_closed_form(1.0), 0.29448681226651041861, 1e-15);
  EXPECT_NEAR(weiss_closed_form(0.25), 0.082645038020416401706, 1e-16);
  EXPECT_NEAR(weiss_closed_form(0.1), 0.033288952296403055581, 1e-17);
  EXPECT_NEAR(weiss_closed_form(1e-3), 0.00033333328888889523809, 1e-19);
  EXPECT_NEAR(weiss_closed_form(1e-4), 1e-4 / 3.0 - 2e-12 / 45.0, 1e-20);
  EXPECT_NEAR(weiss_closed_form(40.0), 0.5, 1e-16);
  EXPECT_LE(weiss_closed_form(40.0), 0.5);
  // both sides of each branch switch agree
  EXPECT_NEAR(weiss_closed_form(30.0 - 1e-9), weiss_closed_form(30.0 + 1e-9), 1e-15);
  EXPECT_NEAR(weiss_closed_form(0.25 - 1e-15), weiss_closed_form(0.25 + 1e-15), 2e-15);
}

TEST(WeissClosedForm, MatchesTruncatedSum) {
  for (double mu : {0.1, 1.0, 10.0}) EXPECT_NEAR(weiss_closed_form(mu), weiss_truncated_sum(mu), 1e-8) << mu;
}

TEST(DirectionScan, ZeroColumn) {
  auto b = heat();
  auto z = heat();
  z.coefficients = IndexFamily::power(0.0, 0.0);
  auto scan = uniform_direction_scan({b, z}, 1.5, 4.0);
  ASSERT_EQ(scan.constants.size(), 2u);
  EXPECT_EQ(scan.constants[1], 0.0);
  EXPECT_EQ(scan.sup, scan.constants[0]);
  EXPECT_EQ(scan.argmax, 0u);
}

TEST(DirectionScan, Homogeneity) {
  auto b = heat();
  auto b2 = heat();
  b2.coefficients = IndexFamily::power(2.0 * b.coefficients.c(), 1.0, true);
  auto scan = uniform_direction_scan({b, b2}, 1.5, 4.0);
  EXPECT_NEAR(scan.constants[1], 2.0 * scan.constants[0], 1e-12 * scan.constants[1]);
}

TEST(DirectionScan, HeatColumnDominatesBoundedColumn) {
  auto b = heat();
  auto c = heat();
  c.coefficients = IndexFamily::power(1.0, -1.0);
  auto scan = uniform_direction_scan({b, c}, 1.5, 10.0);
  EXPECT_EQ(scan.argmax, 0u);
  EXPECT_GT(scan.constants[0], scan.constants[1]);
  EXPECT_FALSE(scan.notes.empty());  // p <= 2 and self-adjoint
}

TEST(DirectionScan, IncompatibleColumns) {
  try {
    uniform_direction_scan({heat(), single_mode()}, 2.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompatibleColumns);
  }
}
