#pragma once

#include <vector>

#include "lpadm/measure.hpp"

namespace lpadm {

enum class InputKind { Exponential, Indicator, PiecewiseConstant };

// Inputs on [0, inf). A mirrored input is anchored at the horizon t instead of
// at 0 (u(s) = v(t - s)); only the oracle evaluates those.
struct TestInput {
  InputKind kind = InputKind::Exponential;
  double rate = 1.0;
  double tau = 1.0;
  std::vector<double> breakpoints;  // 0 = t_0 < t_1 < ... < t_m
  std::vector<double> values;       // value on (t_{i-1}, t_i], size m
  double amplitude = 1.0;
  bool mirrored = false;

  static TestInput exponential(double rate);
  static TestInput indicator(double tau);
  static TestInput piecewise(std::vector<double> breakpoints, std::vector<double> values);
  TestInput mirror() const;
  TestInput scaled(double c) const;
};

void validate(const TestInput& u);

// norms on [0, inf)
double lp_norm(const TestInput& u, double p);
double l1_norm(const TestInput& u);

cplx laplace_at(const TestInput& u, cplx z);

// ||Lu||_{L^q(mu)} / ||u||_{L^p}
double embedding_ratio(const TestInput& u, const HalfPlaneMeasure& mu, double p, double q);

std::vector<TestInput> exponential_family(double lo = 1e-3, double hi = 1e6, int per_decade = 4);

struct EmbeddingBound {
  double bound = 0.0;
  double trend = 0.0;  // slope of log ratio vs log rate over the last decade of exponential members
  std::vector<double> rates;
  std::vector<double> ratios;
};

EmbeddingBound embedding_lower_bound(const HalfPlaneMeasure& mu, double p, double q,
                                     const std::vector<TestInput>& family = {});

}  // namespace lpadm
