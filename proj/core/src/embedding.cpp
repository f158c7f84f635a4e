#include "lpadm/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpadm/criteria.hpp"
#include "lpadm/errors.hpp"
#include "lpadm/numerics.hpp"

namespace lpadm {

namespace {

cplx laplace_shape(const TestInput& u, cplx z) {
  switch (u.kind) {
    case InputKind::Exponential: {
      const cplx d = z + u.rate;
      if (std::abs(d) < 1e-300) fail(ErrorCode::PoleAtEvaluation, "z = -rate");
      return 1.0 / d;
    }
    case InputKind::Indicator:
      if (!(z.real() > 0.0) && z != cplx{}) fail(ErrorCode::Precondition, "Re z must be positive");
      return u.tau * num::phi1(-z * u.tau);
    case InputKind::PiecewiseConstant: {
      cplx s{};
      for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double t0 = u.breakpoints[i], dt = u.breakpoints[i + 1] - t0;
        s += u.values[i] * std::exp(-z * t0) * dt * num::phi1(-z * dt);
      }
      return s;
    }
  }
  return {};
}

}  // namespace

TestInput TestInput::exponential(double rate) {
  TestInput u;
  u.kind = InputKind::Exponential;
  u.rate = rate;
  validate(u);
  return u;
}

TestInput TestInput::indicator(double tau) {
  TestInput u;
  u.kind = InputKind::Indicator;
  u.tau = tau;
  validate(u);
  return u;
}

TestInput TestInput::piecewise(std::vector<double> breakpoints, std::vector<double> values) {
  TestInput u;
  u.kind = InputKind::PiecewiseConstant;
  u.breakpoints = std::move(breakpoints);
  u.values = std::move(values);
  validate(u);
  return u;
}

TestInput TestInput::mirror() const {
  TestInput u = *this;
  u.mirrored = !mirrored;
  return u;
}

TestInput TestInput::scaled(double c) const {
  TestInput u = *this;
  u.amplitude *= c;
  return u;
}

void validate(const TestInput& u) {
  switch (u.kind) {
    case InputKind::Exponential:
      if (!(u.rate > 0.0) || !std::isfinite(u.rate)) fail(ErrorCode::InvalidSystem, "exponential rate must be positive");
      break;
    case InputKind::Indicator:
      if (!(u.tau > 0.0) || !std::isfinite(u.tau)) fail(ErrorCode::InvalidSystem, "indicator length must be positive");
      break;
    case InputKind::PiecewiseConstant:
      if (u.breakpoints.size() < 2 || u.breakpoints.front() != 0.0)
        fail(ErrorCode::InvalidSystem, "breakpoints must start at 0 and hold two or more points");
      if (u.values.size() + 1 != u.breakpoints.size()) fail(ErrorCode::InvalidSystem, "need one value per piece");
      for (std::size_t i = 1; i < u.breakpoints.size(); ++i)
        if (!(u.breakpoints[i] > u.breakpoints[i - 1])) fail(ErrorCode::InvalidSystem, "breakpoints must increase");
      break;
  }
}

double lp_norm(const TestInput& u, double p) {
  const double a = std::abs(u.amplitude);
  switch (u.kind) {
    case InputKind::Exponential: return a * std::pow(p * u.rate, -1.0 / p);
    case InputKind::Indicator: return a * std::pow(u.tau, 1.0 / p);
    case InputKind::PiecewiseConstant: {
      num::KahanSum s;
      for (std::size_t i = 0; i < u.values.size(); ++i)
        s.add(std::pow(std::abs(u.values[i]), p) * (u.breakpoints[i + 1] - u.breakpoints[i]));
      return a * std::pow(s.value(), 1.0 / p);
    }
  }
  return 0.0;
}

double l1_norm(const TestInput& u) { return lp_norm(u, 1.0); }

cplx laplace_at(const TestInput& u, cplx z) {
  if (u.mirrored) fail(ErrorCode::Precondition, "mirrored inputs depend on the horizon");
  return u.amplitude * laplace_shape(u, z);
}

double embedding_ratio(const TestInput& u, const HalfPlaneMeasure& mu, double p, double q) {
  validate(u);
  if (!(p >= 1.0) || !(q >= 1.0)) fail(ErrorCode::OutOfRange, "p and q must be at least 1");
  const double norm = lp_norm(u, p);
  if (!(norm > 0.0)) fail(ErrorCode::Precondition, "zero input");
  if (mu.empty()) return 0.0;
  double integral;
  if (u.kind == InputKind::Exponential) {
    integral = std::pow(std::abs(u.amplitude), q) * resolvent_norm_q(mu, q, u.rate);
  } else {
    auto log_h_atom = [&](cplx s) {
      const double a = std::abs(laplace_at(u, s));
      return a > 0.0 ? q * std::log(a) : -std::numeric_limits<double>::infinity();
    };
    auto log_h_real = [&](double s) { return log_h_atom(cplx{s, 0.0}); };
    const double scale = u.kind == InputKind::Indicator ? 1.0 / u.tau : 1.0 / u.breakpoints.back();
    const double cutoff = mu.density() ? mu.density()->cutoff : 0.0;
    integral = mu.integrate_log(log_h_atom, log_h_real, std::max(10.0 * scale, 10.0 * cutoff), 1e-9).value;
  }
  if (!std::isfinite(integral)) fail(ErrorCode::EmbeddingIntegralDiverges, "Laplace transform is not q-integrable against mu");
  return std::pow(integral, 1.0 / q) / norm;
}

std::vector<TestInput> exponential_family(double lo, double hi, int per_decade) {
  std::vector<TestInput> out;
  for (double r : num::logspace(lo, hi, per_decade)) out.push_back(TestInput::exponential(r));
  return out;
}

EmbeddingBound embedding_lower_bound(const HalfPlaneMeasure& mu, double p, double q,
                                     const std::vector<TestInput>& family) {
  const auto fam = family.empty() ? exponential_family() : family;
  EmbeddingBound out;
  if (mu.empty()) return out;
  std::vector<double> er, ey;
  for (const auto& u : fam) {
    const double r = embedding_ratio(u, mu, p, q);
    out.bound = std::max(out.bound, r);
    if (u.kind == InputKind::Exponential) {
      out.rates.push_back(u.rate);
      out.ratios.push_back(r);
    }
  }
  // trend over the last decade of rates
  if (out.rates.size() >= 2) {
    const double top = *std::max_element(out.rates.begin(), out.rates.end());
    std::vector<double> x, y;
    for (std::size_t i = 0; i < out.rates.size(); ++i) {
      if (out.rates[i] < top / 10.0 * (1 - 1e-12) || !(out.ratios[i] > 0.0)) continue;
      x.push_back(std::log(out.rates[i]));
      y.push_back(std::log(out.ratios[i]));
    }
    if (x.size() >= 2) out.trend = num::fit_line(x, y).slope;
  }
  return out;
}

}  // namespace lpadm
