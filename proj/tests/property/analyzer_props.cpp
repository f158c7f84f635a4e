#include <gtest/gtest.h>

#include "gen.hpp"
#include "lpadm/analyzer.hpp"
#include "lpadm/catalog.hpp"
#include "lpadm/report_io.hpp"

using namespace lpadm;
using lpadm::testing::Gen;

namespace {
std::vector<SystemDescriptor> catalog_and_random() {
  std::vector<SystemDescriptor> out;
  for (const auto& e : catalog_entries()) {
    if (e.name == "laplacian-Rn")
      for (double n : {1.0, 2.0, 3.0}) out.push_back(catalog_system(e.name, n));
    else
      out.push_back(catalog_system(e.name));
  }
  Gen g(51);
  for (int c = 0; c < 6; ++c) {
    DiagonalSystem d;
    d.eigenvalues = IndexFamily::power(g.log_uniform(0.1, 10.0), g.uniform(1.0, 3.0));
    d.coefficients = IndexFamily::power(1.0, g.uniform(-0.4, 1.4), g.coin());
    out.push_back(describe(d, "random-" + std::to_string(c)));
  }
  for (int c = 0; c < 4; ++c) out.push_back(describe(g.real_diagonal(1, 50), "finite-" + std::to_string(c)));
  return out;
}
}  // namespace

TEST(AnalyzerProps, VerdictMonotoneAndSupported) {
  std::vector<double> grid;
  for (double p = 1.1; p <= 8.0; p *= 1.08) grid.push_back(p);
  for (const auto& s : catalog_and_random()) {
    Analyzer a(s, {.measure = {.k_max = 200'000}});
    bool yes = false;
    for (double p : grid) {
      const auto v = a.analyze(p);
      if (yes) EXPECT_NE(v.admissible, Admissible::No) << s.name << " p " << p;
      yes = yes || v.admissible == Admissible::Yes;
      EXPECT_TRUE(evidence_supports_verdict(to_json(v))) << s.name << " p " << p;
    }
  }
}

TEST(AnalyzerProps, ScanBracketReevaluates) {
  const std::vector<std::tuple<std::string, std::optional<double>, double, double>> cases{
      {"heat1d-dirichlet", std::nullopt, 2.0, 8.0},
      {"laplacian-Rn", 1.0, 1.05, 3.0},
      {"laplacian-Rn", 2.0, 1.05, 4.0},
      {"heat-halfline-dirichlet", std::nullopt, 2.0, 8.0}};
  for (const auto& [name, par, lo, hi] : cases) {
    const auto sys = catalog_system(name, par);
    const auto scan = threshold_scan(sys, lo, hi, 0.02);
    EXPECT_LE(scan.p_high - scan.p_low, 0.04) << name;
    EXPECT_NEAR(scan.p_star, *sys.known_threshold, 0.02) << name;
    // fresh analyzer, same answers
    Analyzer again(sys);
    EXPECT_EQ(again.analyze(scan.p_high).admissible, Admissible::Yes) << name;
    EXPECT_EQ(again.analyze(scan.p_low).admissible, scan.low_verdict) << name;
    EXPECT_NE(scan.low_verdict, Admissible::Yes);
    const auto twice = threshold_scan(sys, lo, hi, 0.02);
    EXPECT_EQ(twice.p_low, scan.p_low);
    EXPECT_EQ(twice.p_high, scan.p_high);
  }
}

TEST(AnalyzerProps, AuditCleanOnCatalog) {
  for (const auto& s : catalog_and_random()) {
    const auto c = consistency_audit(s, default_audit_grid());
    EXPECT_TRUE(c.empty()) << s.name << ": " << (c.empty() ? "" : c.front().rule + " " + c.front().detail);
  }
}
