#include "lpadm/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lpadm/errors.hpp"
#include "lpadm/numerics.hpp"

namespace lpadm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;
constexpr double kUnboundedSlope = 0.05;
constexpr double kBoundedSlope = 1e-4;
constexpr double kSettlingSlope = 1e-2;

double conj_exp(double p) { return p / (p - 1.0); }

void check_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) fail(ErrorCode::OutOfRange, "p must lie in (1, inf)");
}

// sum_k mass_k |s_k|^sp / |lambda + s_k|^q over atoms, tail and density
double weighted_resolvent_q(const HalfPlaneMeasure& mu, double q, double lambda, double sp) {
  num::KahanSum acc;
  const double hq = 0.5 * q;
  for (const auto& a : mu.atoms()) {
    const double d2 = std::norm(lambda + a.location);
    double v = a.mass * (q == 2.0 ? 1.0 / d2 : std::pow(d2, -hq));
    if (sp != 0.0) v *= std::pow(std::abs(a.location), sp);
    acc.add(v);
  }
  double total = acc.value();
  auto log_h = [&](double s) { return sp * std::log(s) - q * std::log(lambda + s); };
  if (mu.tail()) total += mu.tail()->sum_log(log_h).value;
  if (mu.density()) total += mu.density_integral_log(log_h, 10.0 * lambda).value;
  return total;
}

struct EdgeFit {
  double right = 0.0;
  double right_prev = 0.0;  // the decade before the last
  double left = 0.0;
};

double window_slope(const std::vector<double>& lambdas, const std::vector<double>& log_g, std::size_t from,
                    std::size_t to) {
  std::vector<double> x, y;
  for (std::size_t i = from; i < to; ++i) {
    x.push_back(std::log(lambdas[i]));
    y.push_back(log_g[i]);
  }
  return num::fit_line(x, y).slope;
}

// slopes of log g over the first and last decade of the grid
EdgeFit edge_slopes(const std::vector<double>& lambdas, const std::vector<double>& log_g, int per_decade) {
  EdgeFit e;
  const std::size_t n = lambdas.size();
  const std::size_t w = std::min<std::size_t>(std::size_t(per_decade) + 1, n);
  if (w < 2) return e;
  e.right = window_slope(lambdas, log_g, n - w, n);
  e.left = window_slope(lambdas, log_g, 0, w);
  e.right_prev = n >= 2 * w - 1 ? window_slope(lambdas, log_g, n - 2 * w + 1, n - w + 1) : e.right;
  return e;
}

// Flat right edge, or a small slope that shrinks by half or more per decade
// (algebraic approach to a finite limit; logarithmic growth shrinks far slower).
bool right_edge_bounded(const EdgeFit& e) {
  if (e.right <= kBoundedSlope) return true;
  return e.right <= kSettlingSlope && e.right_prev > 0.0 && e.right <= 0.5 * e.right_prev;
}

struct SupResult {
  double value = 0.0;
  double at = 0.0;
};

SupResult refine_sup(const std::vector<double>& lambdas, const std::vector<double>& g,
                     const std::function<double(double)>& eval) {
  const auto it = std::max_element(g.begin(), g.end());
  const auto i = std::size_t(it - g.begin());
  SupResult r{*it, lambdas[i]};
  if (i == 0 || i + 1 == g.size()) return r;
  const auto ext = num::golden_max_log(eval, lambdas[i - 1], lambdas[i + 1], 1e-6);
  if (ext.value > r.value) r = {ext.value, ext.x};
  return r;
}

Sufficiency geometry_sufficiency(const GeometryContext& ctx, CriterionReport& rep) {
  if (ctx.sector_ok) return Sufficiency::Equivalent;
  rep.notes.push_back("sector assumption unmet: only the necessary direction is used");
  return Sufficiency::Necessary;
}

}  // namespace

std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::AdmissibleEvidence: return "AdmissibleEvidence";
    case Evidence::NotAdmissibleEvidence: return "NotAdmissibleEvidence";
    case Evidence::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(Sufficiency s) {
  switch (s) {
    case Sufficiency::Sufficient: return "Sufficient";
    case Sufficiency::Necessary: return "Necessary";
    case Sufficiency::Equivalent: return "Equivalent";
  }
  return "?";
}

std::string to_string(WeissRule w) {
  switch (w) {
    case WeissRule::Equivalent: return "Equivalent";
    case WeissRule::SufficientOnly: return "SufficientOnly";
    case WeissRule::Unknown: return "Unknown";
  }
  return "?";
}

// --- fractional membership -------------------------------------------------

namespace {

std::vector<std::int64_t> window_indices(std::int64_t first, std::int64_t last, int samples) {
  std::vector<std::int64_t> out;
  const double lo = std::max(double(first), double(last) / 10.0), hi = double(last);
  for (int i = 0; i < samples; ++i) {
    const double x = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (samples - 1));
    const auto k = std::int64_t(std::llround(x));
    if (out.empty() || k > out.back()) out.push_back(k);
  }
  return out;
}

double log_membership_term(const DiagonalSystem& s, double k, double beta) {
  return s.q * (s.log_abs_b_at(k) - beta * s.log_neg_lambda_at(k));
}

TailFit membership_fit(const DiagonalSystem& s, double beta, const MembershipOptions& opts) {
  const auto last = s.first_index + opts.terms - 1;
  const auto idx = window_indices(std::max<std::int64_t>(s.first_index, 1), last, opts.window_samples);
  std::vector<double> x, y;
  for (auto k : idx) {
    x.push_back(double(k));
    y.push_back(log_membership_term(s, double(k), beta));
  }
  return fit_tail(x, y);
}

}  // namespace

SeriesVerdict sobolev_membership(const DiagonalSystem& s, double beta, const MembershipOptions& opts) {
  if (!(beta > 0.0 && beta < 1.0)) fail(ErrorCode::OutOfRange, "beta must lie in (0, 1)");
  validate(s);
  if (s.zero_coefficients()) {
    TailFit zero;
    zero.all_zero = true;
    auto v = classify(zero, 0.0);
    v.rule = "zero coefficients";
    return v;
  }
  if (s.finite()) {
    num::KahanSum acc;
    for (std::int64_t k = s.first_index; k <= s.last_index(); ++k) {
      const double m = coefficient_mass(s.b(k), s.q);
      if (m > 0.0) acc.add(m * std::pow(std::abs(s.lambda(k)), -beta * s.q));
    }
    TailFit zero;
    zero.all_zero = true;
    auto v = classify(zero, acc.value());
    v.rule = "finite sum";
    return v;
  }
  num::KahanSum acc;
  const auto last = s.first_index + opts.terms - 1;
  for (std::int64_t k = s.first_index; k <= last; ++k) {
    const double l = log_membership_term(s, double(k), beta);
    if (l > 709.0) {
      acc.add(kInf);
      break;
    }
    acc.add(std::exp(l));
  }
  return classify(membership_fit(s, beta, opts), acc.value());
}

SeriesVerdict sobolev_membership(const SystemDescriptor& s, double beta, const MembershipOptions& opts) {
  const auto* d = std::get_if<DiagonalSystem>(&s.system);
  if (!d) fail(ErrorCode::WrongSystemKind, "fractional membership needs a diagonal system");
  return sobolev_membership(*d, beta, opts);
}

InterpolationResult interpolation_threshold(const DiagonalSystem& s, double tol, const MembershipOptions& opts) {
  validate(s);
  if (s.zero_coefficients()) fail(ErrorCode::Precondition, "coefficients are identically zero");
  if (s.finite()) return {0.0, 1.0};
  auto ok = [&](double beta) { return raw_convergent(membership_fit(s, beta, opts)); };
  double lo = 0.0, hi = 1.0 - 1e-12;
  if (!ok(hi)) fail(ErrorCode::NoMembership, "b lies in no X_{-beta} with beta < 1");
  if (ok(1e-12)) return {0.0, 1.0};
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return {hi, 1.0 / (1.0 - hi)};
}

// --- Carleson geometry -----------------------------------------------------

ScanWindow resolved_window(const HalfPlaneMeasure& mu, ScanWindow w) {
  const double lim = mu.resolved_limit();
  if (!std::isfinite(lim)) return w;
  const int top = int(std::floor(std::log2(lim))) - 1;
  w.j_max = std::max(w.j_min + w.tail_points, std::min(w.j_max, top));
  w.n_max = std::max(w.n_min + w.tail_points, std::min(w.n_max, top));
  return w;
}

SquareProfile square_ratio_profile(const HalfPlaneMeasure& mu, double p, double q, const ScanWindow& w_in) {
  check_p(p);
  const ScanWindow w = resolved_window(mu, w_in);
  const double e = q / conj_exp(p);
  SquareProfile prof;
  for (int j = w.j_min; j <= w.j_max; ++j) {
    const double a = std::ldexp(1.0, j);
    prof.scales.push_back(a);
    prof.ratios.push_back(square_mass(mu, a) / std::pow(2.0 * a, e));
  }
  return prof;
}

CriterionReport carleson_square_criterion(const HalfPlaneMeasure& mu, double p, double q, const ScanWindow& w_in,
                                          const GeometryContext& ctx) {
  check_p(p);
  const ScanWindow w = resolved_window(mu, w_in);
  if (p > q) fail(ErrorCode::WrongBranch, "p > q: use the dyadic strip criterion");
  CriterionReport rep;
  rep.id = "carleson-square";
  rep.sufficiency = geometry_sufficiency(ctx, rep);
  if (mu.max_off_axis_ratio() > 1.0) rep.notes.push_back("atoms with |Im s| > Re s: only symmetric squares are scanned");
  const auto prof = square_ratio_profile(mu, p, q, w);
  const double e = q / conj_exp(p);
  double witness = *std::max_element(prof.ratios.begin(), prof.ratios.end());
  // atom-aligned scales catch the jump of mu(Q_I) at each atom
  const auto& atoms = mu.atoms();
  const double a_lo = std::ldexp(1.0, w.j_min), a_hi = std::ldexp(1.0, w.j_max);
  const std::size_t stride = std::max<std::size_t>(1, atoms.size() / 512);
  for (std::size_t i = 0; i < atoms.size(); i += stride) {
    const double a0 = std::max(atoms[i].location.real(), std::abs(atoms[i].location.imag())) / 2.0;
    for (double f : {1.0 - 1e-9, 1.0 + 1e-9}) {
      const double a = a0 * f;
      if (a < a_lo || a > a_hi) continue;
      witness = std::max(witness, square_mass(mu, a) / std::pow(2.0 * a, e));
    }
  }
  rep.witness = witness;
  if (witness == 0.0) {
    rep.verdict = Evidence::AdmissibleEvidence;
    rep.notes.push_back("zero measure");
    return rep;
  }
  const int tp = std::min<int>(w.tail_points, int(prof.scales.size()));
  auto slope_over = [&](std::size_t from, std::size_t to) {
    std::vector<double> x, y;
    for (std::size_t i = from; i < to; ++i) {
      if (!(prof.ratios[i] > 0.0)) continue;
      x.push_back(std::log(prof.scales[i]));
      y.push_back(std::log(prof.ratios[i]));
    }
    return x.size() < 2 ? 0.0 : num::fit_line(x, y).slope;
  };
  const double right = slope_over(prof.scales.size() - std::size_t(tp), prof.scales.size());
  rep.growth = right;
  int state = right <= kBoundaryEps ? 0 : right >= kUnboundedSlope ? 2 : 1;
  if (prof.ratios.front() > 0.0) {
    const double left = slope_over(0, std::size_t(tp));
    rep.notes.push_back("small-scale slope " + std::to_string(left));
    const int ls = left >= -kBoundaryEps ? 0 : left <= -kUnboundedSlope ? 2 : 1;
    state = std::max(state, ls);
  }
  rep.verdict = state == 0 ? Evidence::AdmissibleEvidence : state == 2 ? Evidence::NotAdmissibleEvidence : Evidence::Inconclusive;
  return rep;
}

std::vector<double> strip_masses(const HalfPlaneMeasure& mu, const ScanWindow& w) {
  std::vector<double> out;
  out.reserve(std::size_t(w.n_max - w.n_min + 1));
  for (int n = w.n_min; n <= w.n_max; ++n) out.push_back(strip_mass(mu, n));
  return out;
}

CriterionReport dyadic_strip_criterion(const std::vector<double>& masses, double p, double q, const ScanWindow& w,
                                       const GeometryContext& ctx) {
  check_p(p);
  if (!(p > q)) fail(ErrorCode::WrongBranch, "p <= q: use the Carleson square criterion");
  if (int(masses.size()) != w.n_max - w.n_min + 1) fail(ErrorCode::Precondition, "strip mass count does not match the window");
  CriterionReport rep;
  rep.id = "dyadic-strip";
  rep.sufficiency = geometry_sufficiency(ctx, rep);
  const double e = p / (p - q);
  const double shrink = q / conj_exp(p) * kLn2;
  std::vector<double> logt(masses.size());
  num::KahanSum acc;
  int n_first = 0;
  bool any = false;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const int n = w.n_min + int(i);
    if (masses[i] > 0.0) {
      logt[i] = e * (std::log(masses[i]) - n * shrink);
      acc.add(std::exp(std::min(logt[i], 709.0)));
      if (!any) n_first = n;
      any = true;
    } else {
      logt[i] = -kInf;
    }
  }
  if (!any) {
    TailFit zero;
    zero.all_zero = true;
    rep.series = classify(zero, 0.0);
    rep.verdict = Evidence::AdmissibleEvidence;
    rep.notes.push_back("zero measure");
    return rep;
  }
  const std::size_t tp = std::min<std::size_t>(std::size_t(w.tail_points), masses.size());
  std::vector<double> x, y;
  for (std::size_t i = masses.size() - tp; i < masses.size(); ++i) {
    x.push_back(double(w.n_min + int(i) - n_first + 1));
    y.push_back(logt[i]);
  }
  auto verdict = classify(x, y, acc.value());
  if (masses.front() > 0.0) {
    x.clear();
    y.clear();
    for (std::size_t i = 0; i < tp; ++i) {
      x.push_back(double(tp - i));
      y.push_back(logt[i]);
    }
    verdict = combine_tails(verdict, classify(x, y, acc.value()));
  }
  rep.series = verdict;
  rep.witness = verdict.partial_value;
  rep.growth = verdict.tail_exponent;
  rep.verdict = verdict.classification == Convergence::Convergent   ? Evidence::AdmissibleEvidence
                : verdict.classification == Convergence::Divergent ? Evidence::NotAdmissibleEvidence
                                                                    : Evidence::Inconclusive;
  return rep;
}

CriterionReport dyadic_strip_criterion(const HalfPlaneMeasure& mu, double p, double q, const ScanWindow& w,
                                       const GeometryContext& ctx) {
  check_p(p);
  if (!(p > q)) fail(ErrorCode::WrongBranch, "p <= q: use the Carleson square criterion");
  const ScanWindow rw = resolved_window(mu, w);
  return dyadic_strip_criterion(strip_masses(mu, rw), p, q, rw, ctx);
}

// --- resolvent --------------------------------------------------------------

double resolvent_norm_q(const HalfPlaneMeasure& mu, double q, double lambda) {
  return weighted_resolvent_q(mu, q, lambda, 0.0);
}

ResolventProfile resolvent_profile(const HalfPlaneMeasure& mu, double q, const ResolventGrid& grid) {
  ResolventProfile prof;
  prof.q = q;
  prof.lambdas = num::logspace(grid.lo, grid.hi, grid.per_decade);
  for (double l : prof.lambdas) prof.norms_q.push_back(resolvent_norm_q(mu, q, l));
  return prof;
}

WeissRule weiss_rule_applicable(const SystemDescriptor& s, double p) {
  bool self_adjoint = false;
  if (const auto* d = std::get_if<DiagonalSystem>(&s.system)) {
    self_adjoint = d->q == 2.0 && d->real_spectrum();
  } else if (std::holds_alternative<PowerLawDensitySystem>(s.system)) {
    self_adjoint = true;
  } else {
    const auto& m = std::get<MultiplierSystem>(s.system);
    self_adjoint = m.q == 2.0 && std::all_of(m.atoms.begin(), m.atoms.end(), [](const auto& a) { return a.symbol.imag() == 0.0; });
  }
  return self_adjoint && p <= 2.0 ? WeissRule::Equivalent : WeissRule::Unknown;
}

CriterionReport resolvent_weiss_sup(const SystemDescriptor& s, const HalfPlaneMeasure& mu,
                                    const ResolventProfile& prof, double p) {
  check_p(p);
  CriterionReport rep;
  rep.id = "resolvent";
  const bool eq = weiss_rule_applicable(s, p) == WeissRule::Equivalent;
  rep.sufficiency = eq ? Sufficiency::Equivalent : Sufficiency::Necessary;
  if (!eq) rep.notes.push_back("p-Weiss rule not established here: bound is necessary only");
  const double q = prof.q;
  std::vector<double> g, logg;
  bool zero = true;
  for (std::size_t i = 0; i < prof.lambdas.size(); ++i) {
    const double l = prof.lambdas[i];
    const double v = std::pow(l, 1.0 / p) * std::pow(prof.norms_q[i], 1.0 / q);
    g.push_back(v);
    logg.push_back(v > 0.0 ? std::log(v) : -kInf);
    if (v > 0.0) zero = false;
  }
  if (zero) {
    rep.verdict = Evidence::AdmissibleEvidence;
    rep.witness = 0.0;
    rep.notes.push_back("zero control operator");
    return rep;
  }
  const int per_decade = int(std::lround((prof.lambdas.size() - 1) / std::log10(prof.lambdas.back() / prof.lambdas.front())));
  auto edges = edge_slopes(prof.lambdas, logg, per_decade);
  auto eval = [&](double l) { return std::pow(l, 1.0 / p) * std::pow(resolvent_norm_q(mu, q, l), 1.0 / q); };
  const auto sup = refine_sup(prof.lambdas, g, eval);
  rep.witness = sup.value;
  rep.growth = edges.right;
  rep.notes.push_back("argmax lambda " + std::to_string(sup.at));
  // lambda -> 0 can only blow up when the support reaches 0; otherwise the
  // left edge just shows g falling off past the lowest atom
  if (mu.support_start() > 0.0) edges.left = 0.0;
  if (!std::isfinite(sup.value) || edges.right > kUnboundedSlope || edges.left < -kUnboundedSlope) {
    rep.verdict = Evidence::NotAdmissibleEvidence;
    if (!std::isfinite(sup.value)) rep.witness = kInf;
  } else if (right_edge_bounded(edges) && edges.left >= -kBoundedSlope) {
    rep.verdict = Evidence::AdmissibleEvidence;
  } else {
    rep.verdict = Evidence::Inconclusive;
  }
  return rep;
}

CriterionReport resolvent_weiss_sup(const SystemDescriptor& s, double p, const MeasureOptions& mopts) {
  check_p(p);
  validate(s);
  if (!exponentially_stable(s)) fail(ErrorCode::UnstableSpectrum, "spectrum reaches 0: shift the system first");
  const auto mu = build_measure(s, mopts);
  return resolvent_weiss_sup(s, mu, resolvent_profile(mu, s.q()), p);
}

// --- Favard norms and power-law threshold --------------------------------------

FavardResult favard_norm(const DiagonalSystem& s, double alpha, FavardLevel level, const MeasureOptions& mopts) {
  if (!(alpha > 0.0 && alpha <= 1.0)) fail(ErrorCode::OutOfRange, "alpha must lie in (0, 1]");
  const auto mu = build_measure(s, mopts);
  const double sp = level == FavardLevel::State ? s.q : 0.0;
  auto eval = [&](double l) { return std::pow(l, alpha) * std::pow(weighted_resolvent_q(mu, s.q, l, sp), 1.0 / s.q); };
  const ResolventGrid grid;
  const auto lambdas = num::logspace(grid.lo, grid.hi, grid.per_decade);
  std::vector<double> g, logg;
  for (double l : lambdas) {
    const double v = eval(l);
    if (!std::isfinite(v)) return {kInf, true, kInf};
    g.push_back(v);
    logg.push_back(v > 0.0 ? std::log(v) : -kInf);
  }
  if (*std::max_element(g.begin(), g.end()) == 0.0) return {};
  const auto edges = edge_slopes(lambdas, logg, grid.per_decade);
  if (!right_edge_bounded(edges)) return {kInf, true, edges.right};
  return {refine_sup(lambdas, g, eval).value, false, edges.right};
}

double power_law_threshold(double gamma) {
  if (!(gamma > -1.0 && gamma < 1.0)) fail(ErrorCode::OutOfRange, "gamma must lie in (-1, 1)");
  return 2.0 / (1.0 - gamma);
}

}  // namespace lpadm
