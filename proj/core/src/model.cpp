#include "lpadm/model.hpp"

#include <cmath>
#include <numbers>

#include "lpadm/errors.hpp"

namespace lpadm {

namespace {

std::string fmt_index(std::int64_t k) { return "k=" + std::to_string(k); }

}  // namespace

bool DiagonalSystem::finite() const { return eigenvalues.is_explicit() || coefficients.is_explicit(); }

std::int64_t DiagonalSystem::count() const {
  if (eigenvalues.is_explicit()) return std::int64_t(eigenvalues.values().size());
  if (coefficients.is_explicit()) return std::int64_t(coefficients.values().size());
  fail(ErrorCode::Precondition, "count() on an infinite diagonal family");
}

cplx DiagonalSystem::lambda(std::int64_t k) const {
  if (eigenvalues.is_explicit()) return eigenvalues.values().at(std::size_t(k - first_index)) - shift;
  return cplx{-eigenvalues.magnitude(double(k)) - shift, 0.0};
}

cplx DiagonalSystem::b(std::int64_t k) const {
  if (coefficients.is_explicit()) {
    const auto i = k - first_index;
    if (i < 0 || i >= std::int64_t(coefficients.values().size())) return {};
    return coefficients.values()[std::size_t(i)];
  }
  return cplx{coefficients.signed_value(k), 0.0};
}

double DiagonalSystem::neg_lambda_at(double x) const { return eigenvalues.magnitude(x) + shift; }

double DiagonalSystem::log_neg_lambda_at(double x) const {
  const double lm = eigenvalues.log_magnitude(x);
  if (shift == 0.0) return lm;
  return lm + std::log1p(shift * std::exp(-lm));
}

double DiagonalSystem::log_abs_b_at(double x) const { return coefficients.log_magnitude(x); }

bool DiagonalSystem::real_spectrum() const {
  if (!eigenvalues.is_explicit()) return true;
  for (const auto& v : eigenvalues.values())
    if (v.imag() != 0.0) return false;
  return true;
}

bool DiagonalSystem::zero_coefficients() const { return coefficients.identically_zero(); }

double SystemDescriptor::q() const {
  return std::visit([](const auto& s) { return s.q; }, system);
}

SystemDescriptor describe(SystemVariant system, std::string name) {
  SystemDescriptor d;
  d.name = std::move(name);
  d.system = std::move(system);
  return d;
}

void validate(const DiagonalSystem& s) {
  if (!(s.q > 1.0) || !std::isfinite(s.q)) fail(ErrorCode::InvalidSystem, "state exponent q must lie in (1, inf)");
  if (s.sector_angle && !(*s.sector_angle > 0.0 && *s.sector_angle < std::numbers::pi / 2))
    fail(ErrorCode::InvalidSystem, "sector_angle must lie in (0, pi/2)");
  if (!(s.shift >= 0.0)) fail(ErrorCode::InvalidSystem, "negative shift");
  const auto& ev = s.eigenvalues;
  const auto& co = s.coefficients;
  if (ev.is_explicit() && co.is_explicit() && ev.values().size() != co.values().size())
    fail(ErrorCode::InvalidSystem, "eigenvalue and coefficient lists differ in length");
  if (ev.is_explicit()) {
    for (std::size_t i = 0; i < ev.values().size(); ++i) {
      const cplx l = ev.values()[i] - s.shift;
      const auto k = s.first_index + std::int64_t(i);
      if (!(l.real() < 0.0)) fail(ErrorCode::UnstableSpectrum, "Re lambda >= 0 at " + fmt_index(k));
      if (s.sector_angle && !(std::abs(std::arg(-l)) < *s.sector_angle))
        fail(ErrorCode::InvalidSystem, "-lambda outside the sector at " + fmt_index(k));
    }
  } else {
    if (!(ev.c() > 0.0)) fail(ErrorCode::UnstableSpectrum, "eigenvalue family needs c > 0");
    if (ev.alternate()) fail(ErrorCode::InvalidSystem, "eigenvalue family cannot alternate sign");
    if (ev.r() < 0.0 || ev.rho() < 1.0 || (ev.r() == 0.0 && ev.rho() == 1.0))
      fail(ErrorCode::UnsupportedTail, "eigenvalue family must grow monotonically (r > 0 or rho > 1)");
    if (s.first_index < (ev.r() == 0.0 ? 0 : 1)) fail(ErrorCode::InvalidSystem, "index offset out of range");
    if (!co.is_explicit() && co.rho() != 1.0 && ev.rho() == 1.0)
      fail(ErrorCode::UnsupportedTail, "geometric coefficients over a power spectrum have no closed-form strip masses");
  }
  if (!co.is_explicit() && !std::isfinite(co.c())) fail(ErrorCode::InvalidSystem, "coefficient family scale");
  if (!co.is_explicit() && co.rho() <= 0.0) fail(ErrorCode::InvalidSystem, "coefficient ratio must be positive");
}

void validate(const PowerLawDensitySystem& s) {
  if (!(s.gamma > -1.0 && s.gamma < 1.0)) fail(ErrorCode::InvalidSystem, "gamma must lie in (-1, 1)");
  if (!(s.sigma >= 0.0)) fail(ErrorCode::InvalidSystem, "sigma must be nonnegative");
  if (!(s.scale > 0.0)) fail(ErrorCode::InvalidSystem, "scale must be positive");
  if (s.q != 2.0) fail(ErrorCode::InvalidSystem, "power-law systems live on a Hilbert space (q = 2)");
}

void validate(const MultiplierSystem& s) {
  if (!(s.q > 1.0) || !std::isfinite(s.q)) fail(ErrorCode::InvalidSystem, "state exponent q must lie in (1, inf)");
  for (std::size_t j = 0; j < s.atoms.size(); ++j) {
    if (!(s.atoms[j].weight > 0.0)) fail(ErrorCode::InvalidSystem, "weight must be positive at atom " + std::to_string(j));
    if (!(s.atoms[j].symbol.real() < 0.0))
      fail(ErrorCode::UnstableSpectrum, "Re a >= 0 at atom " + std::to_string(j));
  }
}

void validate(const SystemDescriptor& s) {
  std::visit([](const auto& v) { validate(v); }, s.system);
}

SystemDescriptor shift_system(const SystemDescriptor& s, double omega) {
  if (!(omega > 0.0)) fail(ErrorCode::Precondition, "shift must be positive");
  SystemDescriptor out = s;
  std::visit(
      [omega](auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DiagonalSystem>) {
          v.shift += omega;
        } else if constexpr (std::is_same_v<T, PowerLawDensitySystem>) {
          v.sigma += omega;
        } else {
          for (auto& a : v.atoms) a.symbol -= omega;
        }
      },
      out.system);
  out.applied_shift += omega;
  return out;
}

bool exponentially_stable(const SystemDescriptor& s) {
  if (const auto* p = std::get_if<PowerLawDensitySystem>(&s.system)) return p->sigma > 0.0;
  // diagonal families grow in modulus and finite lists have Re lambda < 0 by validation
  return true;
}

double coefficient_mass(cplx b, double q) {
  const double a = std::abs(b);
  return q == 2.0 ? a * a : std::pow(a, q);
}

}  // namespace lpadm
