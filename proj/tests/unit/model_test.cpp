#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lpadm/catalog.hpp"
#include "lpadm/errors.hpp"
#include "lpadm/model.hpp"

using namespace lpadm;

namespace {
constexpr double kPi = std::numbers::pi;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no lpadm::Error thrown";
  return ErrorCode::Precondition;
}
}  // namespace

TEST(Family, PowerAndGeometricValues) {
  auto f = IndexFamily::power(2.0, 1.5, true);
  EXPECT_DOUBLE_EQ(f.signed_value(1), -2.0);
  EXPECT_DOUBLE_EQ(f.signed_value(4), 16.0);
  auto g = IndexFamily::geometric(3.0, 2.0);
  EXPECT_DOUBLE_EQ(g.signed_value(5), 96.0);
  EXPECT_DOUBLE_EQ(g.log_magnitude(5.0), std::log(96.0));
  EXPECT_TRUE(IndexFamily::power(0.0, 1.0).identically_zero());
  EXPECT_TRUE(IndexFamily::explicit_values({0.0, 0.0}).identically_zero());
}

TEST(Model, Heat1dModes) {
  auto d = catalog_system("heat1d-dirichlet");
  const auto& s = std::get<DiagonalSystem>(d.system);
  EXPECT_FALSE(s.finite());
  EXPECT_DOUBLE_EQ(s.lambda(3).real(), -9.0 * kPi * kPi);
  EXPECT_DOUBLE_EQ(s.b(3).real(), -std::sqrt(2.0) * 3.0 * kPi);
  EXPECT_DOUBLE_EQ(s.b(2).real(), std::sqrt(2.0) * 2.0 * kPi);
  EXPECT_NO_THROW(validate(d));
}

TEST(Model, ShiftByOneSubtractsComponentwise) {
  auto d = shift_system(catalog_system("heat1d-dirichlet"), 1.0);
  const auto& s = std::get<DiagonalSystem>(d.system);
  EXPECT_DOUBLE_EQ(s.lambda(2).real(), -4.0 * kPi * kPi - 1.0);
  EXPECT_DOUBLE_EQ(d.applied_shift, 1.0);
}

TEST(Model, ShiftMovesPowerLawCutoff) {
  auto d = shift_system(catalog_system("laplacian-Rn", 1.0), 1.0);
  EXPECT_DOUBLE_EQ(std::get<PowerLawDensitySystem>(d.system).sigma, 1.0);
  EXPECT_DOUBLE_EQ(std::get<PowerLawDensitySystem>(d.system).gamma, -0.5);
}

TEST(Model, ShiftMovesMultiplierSymbols) {
  MultiplierSystem m;
  m.atoms = {{1.0, {-2.0, 1.0}, 1.0}};
  auto d = shift_system(describe(m), 0.5);
  EXPECT_EQ(std::get<MultiplierSystem>(d.system).atoms[0].symbol, cplx(-2.5, 1.0));
}

TEST(Model, ZeroShiftRejected) {
  EXPECT_EQ(code_of([] { shift_system(catalog_system("heat1d-dirichlet"), 0.0); }), ErrorCode::Precondition);
}

TEST(Model, ValidationErrors) {
  DiagonalSystem s;
  s.eigenvalues = IndexFamily::explicit_values({-1.0, 0.5});
  s.coefficients = IndexFamily::explicit_values({1.0, 1.0});
  EXPECT_EQ(code_of([&] { validate(s); }), ErrorCode::UnstableSpectrum);

  s.eigenvalues = IndexFamily::explicit_values({-1.0});
  EXPECT_EQ(code_of([&] { validate(s); }), ErrorCode::InvalidSystem);

  DiagonalSystem t;
  t.eigenvalues = IndexFamily::power(1.0, 0.0);
  t.coefficients = IndexFamily::power(1.0, 0.0);
  EXPECT_EQ(code_of([&] { validate(t); }), ErrorCode::UnsupportedTail);

  PowerLawDensitySystem p;
  p.gamma = -1.0;
  EXPECT_EQ(code_of([&] { validate(p); }), ErrorCode::InvalidSystem);

  MultiplierSystem m;
  m.atoms = {{0.0, -1.0, 1.0}};
  EXPECT_EQ(code_of([&] { validate(m); }), ErrorCode::InvalidSystem);
  m.atoms = {{1.0, {0.0, 3.0}, 1.0}};
  EXPECT_EQ(code_of([&] { validate(m); }), ErrorCode::UnstableSpectrum);
}

TEST(Model, SectorCheck) {
  DiagonalSystem s;
  s.eigenvalues = IndexFamily::explicit_values({cplx(-1.0, 2.0)});
  s.coefficients = IndexFamily::explicit_values({1.0});
  s.sector_angle = 0.5;
  EXPECT_EQ(code_of([&] { validate(s); }), ErrorCode::InvalidSystem);
  s.sector_angle = 1.2;
  EXPECT_NO_THROW(validate(s));
  EXPECT_FALSE(s.real_spectrum());
}

TEST(Model, StabilityFlag) {
  EXPECT_FALSE(exponentially_stable(catalog_system("laplacian-Rn", 2.0)));
  EXPECT_TRUE(exponentially_stable(shift_system(catalog_system("laplacian-Rn", 2.0), 1.0)));
  EXPECT_TRUE(exponentially_stable(catalog_system("heat1d-dirichlet")));
}

TEST(Catalog, EntriesAndThresholds) {
  EXPECT_EQ(catalog_entries().size(), 7u);
  EXPECT_DOUBLE_EQ(*catalog_system("heat1d-dirichlet").known_threshold, 4.0);
  EXPECT_DOUBLE_EQ(*catalog_system("heat-halfline-neumann").known_threshold, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(*catalog_system("laplacian-Rn", 1.0).known_threshold, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(*catalog_system("laplacian-Rn", 2.0).known_threshold, 2.0);
  EXPECT_DOUBLE_EQ(*catalog_system("laplacian-Rn").known_threshold, 4.0);
  EXPECT_TRUE(catalog_system("weiss-counterexample").weiss_identity);
  EXPECT_NE(catalog_entry("weiss-counterexample").note.find("4-Weiss property is violated"), std::string::npos);
  EXPECT_FALSE(catalog_system("heat1d-dirichlet").citation.empty());
}

TEST(Catalog, BadNamesAndParameters) {
  EXPECT_EQ(code_of([] { catalog_system("nonsense"); }), ErrorCode::NotFound);
  EXPECT_EQ(code_of([] { catalog_system("laplacian-Rn", 4.0); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { catalog_system("counterexample-geometric-small-p", 2.5); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { catalog_system("counterexample-geometric-large-p", 2.0); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { catalog_system("heat1d-dirichlet", 1.0); }), ErrorCode::InvalidSystem);
}

TEST(Catalog, CounterexampleCoefficients) {
  auto d = catalog_system("counterexample-geometric-large-p", 3.0);
  const auto& s = std::get<DiagonalSystem>(d.system);
  // b_k = k^{-1/2} 2^{k/p'}, p' = 3/2
  EXPECT_NEAR(s.b(4).real(), 0.5 * std::pow(2.0, 4.0 * 2.0 / 3.0), 1e-12);
  EXPECT_DOUBLE_EQ(s.lambda(4).real(), -16.0);
}
