#include "lpadm/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpadm/errors.hpp"

namespace lpadm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogCap = 690.0;
constexpr std::int64_t kDirectSumLimit = 100'000;
constexpr std::int64_t kIndexCap = std::int64_t(1) << 62;

bool atom_less(const Atom& x, const Atom& y) {
  if (x.location.real() != y.location.real()) return x.location.real() < y.location.real();
  if (x.location.imag() != y.location.imag()) return x.location.imag() < y.location.imag();
  return x.mass < y.mass;
}

// log-slope of a positive function over [x, 4x]; used to flag non-integrable tails
double log_decay(const std::function<double(double)>& log_f, double x) {
  const double a = log_f(x), b = log_f(4.0 * x);
  if (!std::isfinite(a) || !std::isfinite(b)) return -kInf;
  return (b - a) / std::log(4.0);
}

}  // namespace

FamilyTail::FamilyTail(DiagonalSystem system, std::int64_t first) : sys_(std::move(system)), first_(first) {
  const auto& co = sys_.coefficients;
  if (co.rho() == 1.0) {
    power_mass_ = true;
    mass_c_ = std::pow(std::abs(co.c()), sys_.q);
    mass_s_ = sys_.q * co.r();
  }
}

double FamilyTail::mass(std::int64_t k) const {
  if (power_mass_) return mass_c_ * std::pow(double(k), mass_s_);
  return std::exp(log_mass(double(k)));
}

double FamilyTail::inverse_location(double v) const {
  const auto& ev = sys_.eigenvalues;
  const double w = v - sys_.shift;
  if (!(w > 0.0)) return -kInf;
  const double lc = std::log(ev.c());
  if (ev.rho() == 1.0) return std::exp((std::log(w) - lc) / ev.r());
  if (ev.r() == 0.0) return (std::log(w) - lc) / std::log(ev.rho());
  // c x^r rho^x = w, increasing in x
  const double lw = std::log(w);
  auto g = [&](double x) { return ev.log_magnitude(x) - lw; };
  double lo = 1e-12, hi = 1.0;
  if (g(lo) > 0.0) return lo;
  while (g(hi) < 0.0 && hi < 1e18) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::int64_t FamilyTail::last_index_at_most(double v, bool strict) const {
  auto inside = [&](std::int64_t k) {
    const double s = location(double(k));
    return strict ? s < v : s <= v;
  };
  const double x = inverse_location(v);
  if (!(x >= double(first_))) {
    std::int64_t k = first_ - 1;
    while (k + 1 < first_ + 4 && inside(k + 1)) ++k;
    return k;
  }
  std::int64_t k = x >= double(kIndexCap) ? kIndexCap : std::int64_t(std::floor(x));
  k = std::max(k, first_ - 1);
  while (k < kIndexCap && inside(k + 1)) ++k;
  while (k >= first_ && !inside(k)) --k;
  return k;
}

double FamilyTail::range_mass(std::int64_t k_lo, std::int64_t k_hi) const {
  k_lo = std::max(k_lo, first_);
  if (k_hi < k_lo) return 0.0;
  const std::int64_t n = k_hi - k_lo + 1;
  if (n <= kDirectSumLimit || !power_mass_) {
    num::KahanSum s;
    for (std::int64_t k = k_lo; k <= k_hi; ++k) s.add(mass(k));
    return s.value();
  }
  // Euler-Maclaurin for C x^s; exact when s is a small nonnegative integer
  using ld = long double;
  const ld a = ld(k_lo), b = ld(k_hi), s = ld(mass_s_), c = ld(mass_c_);
  auto pw = [](ld x, ld e) { return std::pow(x, e); };
  ld integral;
  if (std::abs(s + 1) < 1e-15L)
    integral = c * std::log(b / a);
  else
    integral = c * (pw(b, s + 1) - pw(a, s + 1)) / (s + 1);
  const ld ends = c * (pw(a, s) + pw(b, s)) / 2;
  auto deriv = [&](int order, ld x) {
    ld coef = c;
    for (int i = 0; i < order; ++i) coef *= (s - i);
    return coef == 0 ? ld(0) : coef * pw(x, s - order);
  };
  const ld b2 = (deriv(1, b) - deriv(1, a)) / 12;
  const ld b4 = -(deriv(3, b) - deriv(3, a)) / 720;
  const ld b6 = (deriv(5, b) - deriv(5, a)) / 30240;
  return double(integral + ends + b2 + b4 + b6);
}

double FamilyTail::mass_in(double lo, double hi) const {
  if (!(hi > lo)) return 0.0;
  return range_mass(last_index_at_most(lo, false) + 1, last_index_at_most(hi, false));
}

double FamilyTail::mass_below(double x) const { return range_mass(first_, last_index_at_most(x, true)); }

num::Integral FamilyTail::sum_log(const std::function<double(double)>& log_h) const {
  auto log_f = [&](double x) { return log_mass(x) + log_h(location(x)); };
  const double a = double(first_) - 0.5;
  if (log_decay(log_f, std::max(a, 1.0) * 16.0) >= -1.0) return {kInf, kInf};
  auto f = [&](double x) {
    const double l = log_f(x);
    return !(l > -745.0) ? 0.0 : std::exp(l);
  };
  num::Integral r = num::integrate_to_infinity(f, a, 1e-10);
  // midpoint rule error, summed over cells: |f'(a)| / 24
  const double h = 1e-4 * std::max(1.0, a);
  const double d = (f(a + h) - f(std::max(a - h, a * 0.5))) / (a + h - std::max(a - h, a * 0.5));
  r.error += std::abs(d) / 24.0;
  return r;
}

HalfPlaneMeasure::HalfPlaneMeasure(std::vector<Atom> atoms, std::optional<PowerDensity> density,
                                   std::optional<FamilyTail> tail)
    : atoms_(std::move(atoms)), density_(std::move(density)), tail_(std::move(tail)) {
  for (const auto& a : atoms_) {
    if (!(a.location.real() > 0.0)) fail(ErrorCode::InvalidSystem, "atom location must have positive real part");
    if (!(a.mass > 0.0) || !std::isfinite(a.mass)) fail(ErrorCode::InvalidSystem, "atom mass must be positive");
  }
  if (density_) {
    if (!(density_->scale > 0.0)) fail(ErrorCode::InvalidSystem, "density scale must be positive");
    if (!(density_->cutoff >= 0.0)) fail(ErrorCode::InvalidSystem, "density cutoff must be nonnegative");
    if (density_->gamma <= -1.0 && density_->cutoff == 0.0)
      fail(ErrorCode::InvalidSystem, "density exponent <= -1 is not locally finite at 0");
  }
  index();
}

HalfPlaneMeasure HalfPlaneMeasure::unchecked(std::vector<Atom> atoms, std::optional<PowerDensity> density,
                                             std::optional<FamilyTail> tail) {
  HalfPlaneMeasure m;
  m.atoms_ = std::move(atoms);
  m.density_ = std::move(density);
  m.tail_ = std::move(tail);
  m.index();
  return m;
}

void HalfPlaneMeasure::index() {
  std::sort(atoms_.begin(), atoms_.end(), atom_less);
  re_.resize(atoms_.size());
  prefix_.assign(atoms_.size() + 1, 0.0L);
  real_ = true;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    re_[i] = atoms_[i].location.real();
    prefix_[i + 1] = prefix_[i] + atoms_[i].mass;
    if (atoms_[i].location.imag() != 0.0) real_ = false;
  }
}

double HalfPlaneMeasure::max_off_axis_ratio() const {
  double r = 0.0;
  for (const auto& a : atoms_) r = std::max(r, std::abs(a.location.imag()) / a.location.real());
  return r;
}

double HalfPlaneMeasure::atom_mass_in(double lo, double hi) const {
  if (!(hi > lo)) return 0.0;
  const auto i0 = std::upper_bound(re_.begin(), re_.end(), lo) - re_.begin();
  const auto i1 = std::upper_bound(re_.begin(), re_.end(), hi) - re_.begin();
  num::KahanSum s;
  for (auto i = i0; i < i1; ++i) s.add(atoms_[std::size_t(i)].mass);
  double v = s.value();
  if (tail_) v += tail_->mass_in(lo, hi);
  return v;
}

double HalfPlaneMeasure::atom_mass_below(double x, double im_bound) const {
  const auto i1 = std::size_t(std::lower_bound(re_.begin(), re_.end(), x) - re_.begin());
  double v;
  if (real_) {
    v = double(prefix_[i1]);
  } else {
    num::KahanSum s;
    for (std::size_t i = 0; i < i1; ++i)
      if (std::abs(atoms_[i].location.imag()) <= im_bound) s.add(atoms_[i].mass);
    v = s.value();
  }
  if (tail_) v += tail_->mass_below(x);
  return v;
}

double HalfPlaneMeasure::density_mass(double lo, double hi) const {
  if (!density_) return 0.0;
  const auto& d = *density_;
  lo = std::max(lo, d.cutoff);
  if (!(hi > lo)) return 0.0;
  const double g = d.gamma + 1.0;
  if (lo == 0.0) return d.scale * std::pow(hi, g) / g;
  const double l = std::log(hi / lo);
  if (g == 0.0) return d.scale * l;
  return d.scale * std::pow(lo, g) * std::expm1(g * l) / g;
}

HalfPlaneMeasure::Integration HalfPlaneMeasure::integrate_log(const std::function<double(cplx)>& log_h_atom,
                                                              const std::function<double(double)>& log_h_real,
                                                              double split_hint, double rel_tol) const {
  Integration out;
  num::KahanSum s;
  for (const auto& a : atoms_) {
    const double l = log_h_atom(a.location);
    if (l > -745.0) s.add(a.mass * std::exp(l));
  }
  out.atoms = s.value();
  if (tail_) {
    const auto t = tail_->sum_log(log_h_real);
    out.tail = t.value;
    out.tail_error = t.error;
  }
  if (density_) out.density = density_integral_log(log_h_real, split_hint, rel_tol).value;
  out.value = out.atoms + out.tail + out.density;
  return out;
}

num::Integral HalfPlaneMeasure::density_integral_log(const std::function<double(double)>& log_h_real,
                                                    double split_hint, double rel_tol) const {
  if (!density_) return {};
  const auto& d = *density_;
  auto log_f = [&](double x) { return std::log(d.scale) + d.gamma * std::log(x) + log_h_real(x); };
  auto f = [&](double x) {
    if (!(x > 0.0)) return 0.0;
    const double l = log_f(x);
    return !(l > -745.0) ? 0.0 : std::exp(l);
  };
  const double split = std::max(split_hint, d.cutoff > 0.0 ? 2.0 * d.cutoff : 1.0);
  if (log_decay(log_f, split * 100.0) >= -1.0) return {kInf, kInf};
  const auto head = num::integrate(f, d.cutoff, split, rel_tol);
  const auto tail = num::integrate_to_infinity(f, split, rel_tol);
  return {head.value + tail.value, head.error + tail.error};
}

double HalfPlaneMeasure::support_start() const {
  double s = kInf;
  if (!re_.empty()) s = re_.front();
  if (tail_) s = std::min(s, tail_->location(double(tail_->first())));
  if (density_) s = std::min(s, density_->cutoff);
  return s;
}

double HalfPlaneMeasure::resolved_limit() const {
  return tail_ ? tail_->location(double(kIndexCap)) : kInf;
}

HalfPlaneMeasure build_measure(const DiagonalSystem& sys, const MeasureOptions& opts) {
  validate(sys);
  std::vector<Atom> atoms;
  if (sys.zero_coefficients()) return HalfPlaneMeasure(std::move(atoms));
  auto push = [&](std::int64_t k) {
    const cplx l = sys.lambda(k);
    const double m = coefficient_mass(sys.b(k), sys.q);
    if (m > 0.0) atoms.push_back({-l, m});
  };
  if (sys.finite()) {
    for (std::int64_t k = sys.first_index; k <= sys.last_index(); ++k) push(k);
    return HalfPlaneMeasure(std::move(atoms));
  }
  std::int64_t k = sys.first_index;
  for (; k <= opts.k_max; ++k) {
    if (sys.log_neg_lambda_at(double(k)) > kLogCap) break;
    if (std::abs(sys.q * sys.log_abs_b_at(double(k))) > kLogCap) break;
    push(k);
  }
  return HalfPlaneMeasure(std::move(atoms), std::nullopt, FamilyTail(sys, k));
}

HalfPlaneMeasure build_measure(const MultiplierSystem& sys) {
  validate(sys);
  std::vector<Atom> atoms;
  for (const auto& a : sys.atoms) {
    const double m = coefficient_mass(a.coefficient, sys.q) * a.weight;
    if (m > 0.0) atoms.push_back({-a.symbol, m});
  }
  return HalfPlaneMeasure(std::move(atoms));
}

HalfPlaneMeasure build_measure(const PowerLawDensitySystem& sys) {
  validate(sys);
  return HalfPlaneMeasure({}, PowerDensity{sys.gamma, sys.scale, sys.sigma});
}

HalfPlaneMeasure build_measure(const SystemDescriptor& system, const MeasureOptions& opts) {
  return std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DiagonalSystem>)
          return build_measure(s, opts);
        else
          return build_measure(s);
      },
      system.system);
}

double square_mass(const HalfPlaneMeasure& mu, double a) {
  if (!(a > 0.0)) fail(ErrorCode::Precondition, "square_mass needs a > 0");
  return mu.atom_mass_below(2.0 * a, a) + mu.density_mass(0.0, 2.0 * a);
}

double strip_mass(const HalfPlaneMeasure& mu, int n) {
  const double lo = std::ldexp(1.0, n - 1), hi = std::ldexp(1.0, n);
  return mu.atom_mass_in(lo, hi) + mu.density_mass(lo, hi);
}

}  // namespace lpadm
