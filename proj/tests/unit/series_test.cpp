#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "lpadm/series.hpp"

using namespace lpadm;

namespace {
struct Terms {
  std::vector<double> n, logt;
};

Terms power_terms(double s) {
  Terms t;
  for (int i = 0; i < 64; ++i) {
    const double n = std::round(1e5 * std::pow(10.0, i / 63.0));
    t.n.push_back(n);
    t.logt.push_back(s * std::log(n));
  }
  return t;
}

Terms geometric_terms(double log_ratio, int first = 40) {
  Terms t;
  for (int n = first; n < first + 20; ++n) {
    t.n.push_back(n);
    t.logt.push_back(log_ratio * n);
  }
  return t;
}
}  // namespace

TEST(Series, PowerConvergent) {
  auto t = power_terms(-2.0);
  auto v = classify(t.n, t.logt, 1.6);
  EXPECT_EQ(v.classification, Convergence::Convergent);
  EXPECT_EQ(v.mode, TermMode::Power);
  EXPECT_NEAR(v.tail_exponent, -2.0, 1e-9);
  EXPECT_NEAR(v.margin, 1.0, 1e-9);
  EXPECT_EQ(v.partial_value, 1.6);
}

TEST(Series, HarmonicIsDivergentByComparison) {
  auto t = power_terms(-1.0);
  auto v = classify(t.n, t.logt, 0.0);
  EXPECT_EQ(v.classification, Convergence::Divergent);
  EXPECT_EQ(v.rule, "comparison with the harmonic series");
}

TEST(Series, InsideMarginBelowBoundaryIsInconclusive) {
  auto t = power_terms(-1.03);
  EXPECT_EQ(classify(t.n, t.logt, 0.0).classification, Convergence::Inconclusive);
  auto u = power_terms(-1.06);
  EXPECT_EQ(classify(u.n, u.logt, 0.0).classification, Convergence::Convergent);
  auto w = power_terms(-0.5);
  EXPECT_EQ(classify(w.n, w.logt, 0.0).classification, Convergence::Divergent);
}

TEST(Series, GeometricModeDetected) {
  auto t = geometric_terms(std::log(0.5));
  auto v = classify(t.n, t.logt, 0.0);
  EXPECT_EQ(v.mode, TermMode::Geometric);
  EXPECT_EQ(v.classification, Convergence::Convergent);
  EXPECT_NEAR(v.tail_exponent, std::log(0.5), 1e-9);
  EXPECT_EQ(v.boundary, 0.0);

  auto g = geometric_terms(std::log(1.5));
  EXPECT_EQ(classify(g.n, g.logt, 0.0).classification, Convergence::Divergent);
}

TEST(Series, ConstantTermsDiverge) {
  auto t = geometric_terms(0.0);
  EXPECT_EQ(classify(t.n, t.logt, 0.0).classification, Convergence::Divergent);
}

TEST(Series, ZeroTail) {
  std::vector<double> n{1, 2, 3, 4}, lt(4, -std::numeric_limits<double>::infinity());
  auto v = classify(n, lt, 0.0);
  EXPECT_EQ(v.classification, Convergence::Convergent);
  EXPECT_EQ(v.rule, "zero tail");
}

TEST(Series, TooFewTermsIsInconclusive) {
  const double ninf = -std::numeric_limits<double>::infinity();
  std::vector<double> n{1, 2, 3, 4}, lt{0.0, ninf, ninf, -1.0};
  EXPECT_EQ(classify(n, lt, 0.0).classification, Convergence::Inconclusive);
}

TEST(Series, CombineTakesWorst) {
  SeriesVerdict c, d, i;
  c.classification = Convergence::Convergent;
  d.classification = Convergence::Divergent;
  i.classification = Convergence::Inconclusive;
  EXPECT_EQ(combine_tails(c, d).classification, Convergence::Divergent);
  EXPECT_EQ(combine_tails(i, c).classification, Convergence::Inconclusive);
  EXPECT_EQ(combine_tails(i, d).classification, Convergence::Divergent);
  EXPECT_EQ(combine_tails(c, c).classification, Convergence::Convergent);
}

TEST(Series, RawConvergentIgnoresMargin) {
  auto t = power_terms(-1.001);
  auto f = fit_tail(t.n, t.logt);
  EXPECT_TRUE(raw_convergent(f));
  auto u = power_terms(-1.0);
  EXPECT_FALSE(raw_convergent(fit_tail(u.n, u.logt)));
}
