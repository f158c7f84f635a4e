#include "lpadm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lpadm/criteria.hpp"
#include "lpadm/errors.hpp"
#include "lpadm/numerics.hpp"

namespace lpadm {

namespace {

using num::phi1;

// int_0^t e^{lam (t - s)} u(s) ds for one mode
template <class T>
T mode_response(T lam, const TestInput& u, double t) {
  T c{};
  switch (u.kind) {
    case InputKind::Exponential:
      if (u.mirrored) {
        c = t * phi1((lam - u.rate) * t);
      } else {
        const T m = lam + u.rate;
        // pick the form whose phi1 argument has nonpositive real part
        if (std::real(m) > 0.0)
          c = std::exp(lam * t) * t * phi1(-m * t);
        else
          c = std::exp(-u.rate * t) * t * phi1(m * t);
      }
      break;
    case InputKind::Indicator: {
      const double w = std::min(u.tau, t);
      c = w * phi1(lam * w);
      if (!u.mirrored) c *= std::exp(lam * (t - w));
      break;
    }
    case InputKind::PiecewiseConstant:
      for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double a = u.breakpoints[i];
        if (a >= t) break;
        const double b = std::min(u.breakpoints[i + 1], t), d = b - a;
        // mirrored: the piece sits at reversed time (a, b]
        const T shift = u.mirrored ? std::exp(lam * a) : std::exp(lam * (t - b));
        c += u.values[i] * shift * d * phi1(lam * d);
      }
      break;
  }
  return c * u.amplitude;
}

double abs_pow(double a, double q) { return q == 2.0 ? a * a : std::pow(a, q); }

struct ConstantResult {
  double value = 0.0;
  bool certified = true;
};

ConstantResult constant_over(const DiagonalSystem& s, double p, double t, const std::vector<TestInput>& family,
                             const OracleOptions& opts) {
  ConstantResult r;
  for (const auto& u : family) {
    const double n = lp_norm_on(u, p, t);
    if (!(n > 0.0)) continue;
    const auto st = state_response(s, u, t, opts);
    r.value = std::max(r.value, st.norm / n);
    r.certified = r.certified && st.certified;
  }
  return r;
}

}  // namespace

std::string to_string(ProfileClass c) {
  switch (c) {
    case ProfileClass::Plateau: return "Plateau";
    case ProfileClass::Growing: return "Growing";
    case ProfileClass::Inconclusive: return "Inconclusive";
  }
  return "?";
}

StateResponse state_response(const DiagonalSystem& s, const TestInput& u, double t, const OracleOptions& opts) {
  if (!(t > 0.0)) fail(ErrorCode::Precondition, "horizon must be positive");
  validate(s);
  validate(u);
  StateResponse out;
  if (s.zero_coefficients()) return out;
  const double q = s.q;
  const std::int64_t last = s.finite() ? s.last_index() : s.first_index + opts.k_max - 1;
  const bool real = s.real_spectrum();
  num::KahanSum acc;
  for (std::int64_t k = s.first_index; k <= last; ++k) {
    const double m = coefficient_mass(s.b(k), q);
    if (m == 0.0) continue;
    const cplx l = s.lambda(k);
    const double c = real ? std::abs(mode_response(l.real(), u, t)) : std::abs(mode_response(l, u, t));
    acc.add(m * abs_pow(c, q));
  }
  double total = acc.value();
  if (!s.finite()) {
    auto f = [&](double x) {
      const double lb = q * s.log_abs_b_at(x);
      const double c = std::abs(mode_response(-s.neg_lambda_at(x), u, t));
      if (c == 0.0) return 0.0;
      const double l = lb + q * std::log(c);
      return !(l > -745.0) ? 0.0 : std::exp(l);
    };
    const double a = double(last) + 0.5;
    const auto tail = num::integrate_to_infinity(f, a, 1e-10);
    const double h = 1e-3 * a;
    const double slope = (f(a + h) - f(a - h)) / (2.0 * h);
    out.tail = tail.value;
    out.tail_error = tail.error + std::abs(slope) / 24.0;
    total += tail.value;
    out.certified = std::isfinite(total) && out.tail_error <= opts.certify_rel * total;
  }
  out.norm = std::pow(total, 1.0 / q);
  return out;
}

double lp_norm_on(const TestInput& u, double p, double t) {
  const double a = std::abs(u.amplitude);
  switch (u.kind) {
    case InputKind::Exponential: return a * std::pow(t * phi1(-p * u.rate * t), 1.0 / p);
    case InputKind::Indicator: return a * std::pow(std::min(u.tau, t), 1.0 / p);
    case InputKind::PiecewiseConstant: {
      num::KahanSum s;
      for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double lo = u.breakpoints[i];
        if (lo >= t) break;
        const double hi = std::min(u.breakpoints[i + 1], t);
        s.add(std::pow(std::abs(u.values[i]), p) * (hi - lo));
      }
      return a * std::pow(s.value(), 1.0 / p);
    }
  }
  return 0.0;
}

std::vector<TestInput> horizon_family(double t) {
  static const auto rates = num::logspace(1e-3, 1e6, 8);
  static const auto widths = num::logspace(1e-6, 1e3, 8);
  std::vector<TestInput> out;
  for (double r : rates)
    if (r <= t * t * (1 + 1e-12)) out.push_back(TestInput::exponential(r).mirror());
  for (double w : widths)
    if (w >= (1 - 1e-12) / (t * t) && w <= t * (1 + 1e-12)) out.push_back(TestInput::indicator(w).mirror());
  return out;
}

double admissibility_constant(const DiagonalSystem& s, double p, double t, const std::vector<TestInput>& family,
                              const OracleOptions& opts) {
  if (!(p >= 1.0)) fail(ErrorCode::OutOfRange, "p must be at least 1");
  return constant_over(s, p, t, family, opts).value;
}

double admissibility_constant(const DiagonalSystem& s, double p, double t, const OracleOptions& opts) {
  return admissibility_constant(s, p, t, horizon_family(t), opts);
}

std::vector<double> dyadic_times(double t_max) {
  if (!(t_max >= 1.0)) fail(ErrorCode::Precondition, "t_max must be at least 1");
  std::vector<double> out;
  for (double t = 1.0; t <= t_max * (1 + 1e-12); t *= 2.0) out.push_back(t);
  return out;
}

ConstantProfile constant_growth_profile(const DiagonalSystem& s, double p, const std::vector<double>& times,
                                        const OracleOptions& opts) {
  if (times.empty()) fail(ErrorCode::Precondition, "empty time grid");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) fail(ErrorCode::Precondition, "time grid must increase");
  ConstantProfile prof;
  prof.times = times;
  double running = 0.0;
  for (double t : times) {
    const auto r = constant_over(s, p, t, horizon_family(t), opts);
    running = std::max(running, r.value);
    prof.constants.push_back(running);
    prof.certified = prof.certified && r.certified;
  }
  if (running == 0.0) {
    prof.classification = ProfileClass::Plateau;
    return prof;
  }
  std::vector<double> x, y;
  const double from = times.back() / 10.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < from || !(prof.constants[i] > 0.0)) continue;
    x.push_back(std::log(times[i]));
    y.push_back(std::log(prof.constants[i]));
  }
  if (x.size() < 2 || !prof.certified) return prof;
  prof.terminal_slope = num::fit_line(x, y).slope;
  if (prof.terminal_slope <= kPlateauSlope)
    prof.classification = ProfileClass::Plateau;
  else if (prof.terminal_slope >= kGrowingSlope)
    prof.classification = ProfileClass::Growing;
  return prof;
}

ConstantProfile constant_growth_profile(const SystemDescriptor& s, double p, const std::vector<double>& times,
                                        const OracleOptions& opts) {
  const auto* d = std::get_if<DiagonalSystem>(&s.system);
  if (!d) fail(ErrorCode::WrongSystemKind, "the simulation oracle runs on diagonal systems");
  return constant_growth_profile(*d, p, times, opts);
}

double weiss_closed_form(double mu) {
  if (!(mu > 0.0)) fail(ErrorCode::Precondition, "mu must be positive");
  if (mu < 0.25) {
    // Taylor series through mu^15; the closed form cancels badly this close to 0
    static constexpr double c[] = {1.0 / 3,          -2.0 / 45,    2.0 / 315,        -4.0 / 4725,
                                   2.0 / 18711,      -2764.0 / 212837625, 4.0 / 2606175, -28936.0 / 162820783125};
    const double m2 = mu * mu;
    double acc = 0.0;
    for (int i = 7; i >= 0; --i) acc = acc * m2 + c[i];
    return mu * acc;
  }
  if (mu > 30.0) return 0.5 - (2.0 * mu - 1.0) * std::exp(-2.0 * mu);
  // coth mu - mu csch^2 mu with x = e^{-2 mu}
  const double x = std::exp(-2.0 * mu), d = -std::expm1(-2.0 * mu);
  return 0.5 * ((1.0 + x) * d - 4.0 * mu * x) / (d * d);
}

double weiss_truncated_sum(double mu, std::int64_t n_max) {
  if (!(mu > 0.0)) fail(ErrorCode::Precondition, "mu must be positive");
  const double pi2 = std::numbers::pi * std::numbers::pi;
  num::KahanSum acc;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double a = double(n) * double(n) * pi2;
    const double d = mu * mu + a;
    acc.add(2.0 * a / (d * d));
  }
  // remainder past n_max: the integral from n_max + 1/2, in closed form
  const double y = std::numbers::pi * (double(n_max) + 0.5) / mu;
  const double rest = (std::atan(1.0 / y) + y / (1.0 + y * y)) / std::numbers::pi;
  return mu * acc.value() + rest;
}

DirectionScan uniform_direction_scan(const std::vector<DiagonalSystem>& columns, double p, double t,
                                     const OracleOptions& opts) {
  if (columns.empty()) fail(ErrorCode::Precondition, "no input directions");
  const auto& ref = columns.front();
  for (const auto& c : columns)
    if (!(c.eigenvalues == ref.eigenvalues) || c.shift != ref.shift || c.first_index != ref.first_index || c.q != ref.q)
      fail(ErrorCode::IncompatibleColumns, "columns must share the eigenvalue family");
  DirectionScan out;
  for (const auto& c : columns) out.constants.push_back(admissibility_constant(c, p, t, opts));
  const auto it = std::max_element(out.constants.begin(), out.constants.end());
  out.sup = *it;
  out.argmax = std::size_t(it - out.constants.begin());
  if (weiss_rule_applicable(describe(ref), p) == WeissRule::Equivalent)
    out.notes.push_back("uniform boundedness over directions characterizes admissibility of the multi-input operator");
  return out;
}

}  // namespace lpadm
