#include "lpadm/family.hpp"

#include <cmath>
#include <limits>

namespace lpadm {

IndexFamily IndexFamily::explicit_values(std::vector<cplx> values) {
  IndexFamily f;
  f.kind_ = FamilyKind::Explicit;
  f.values_ = std::move(values);
  return f;
}

IndexFamily IndexFamily::power(double c, double r, bool alternate) {
  IndexFamily f;
  f.kind_ = FamilyKind::Power;
  f.c_ = c;
  f.r_ = r;
  f.alternate_ = alternate;
  return f;
}

IndexFamily IndexFamily::geometric(double c, double rho, double r, bool alternate) {
  IndexFamily f;
  f.kind_ = FamilyKind::Geometric;
  f.c_ = c;
  f.rho_ = rho;
  f.r_ = r;
  f.alternate_ = alternate;
  return f;
}

double IndexFamily::log_magnitude(double x) const {
  if (c_ == 0.0) return -std::numeric_limits<double>::infinity();
  double v = std::log(std::abs(c_));
  if (r_ != 0.0) v += r_ * std::log(x);
  if (rho_ != 1.0) v += x * std::log(rho_);
  return v;
}

double IndexFamily::magnitude(double x) const {
  if (c_ == 0.0) return 0.0;
  double v = std::abs(c_);
  if (r_ != 0.0) v *= std::pow(x, r_);
  if (rho_ != 1.0) v *= std::pow(rho_, x);
  if (!std::isfinite(v) || v == 0.0) return std::exp(log_magnitude(x));
  return v;
}

double IndexFamily::signed_value(std::int64_t k) const {
  double v = magnitude(double(k));
  if (c_ < 0.0) v = -v;
  if (alternate_ && (k % 2 != 0)) v = -v;
  return v;
}

bool IndexFamily::identically_zero() const {
  if (kind_ != FamilyKind::Explicit) return c_ == 0.0;
  for (const auto& v : values_)
    if (v != cplx{}) return false;
  return true;
}

}  // namespace lpadm
