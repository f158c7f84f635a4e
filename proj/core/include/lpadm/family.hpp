#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace lpadm {

using cplx = std::complex<double>;

enum class FamilyKind { Explicit, Power, Geometric };

// k -> sign_k * c * k^r * rho^k, or an explicit finite list.
// Geometric families may carry a power factor too (r != 0); that is how the
// k^{-1/2} 2^{k/p'} coefficient sequence is written.
class IndexFamily {
 public:
  IndexFamily() = default;

  static IndexFamily explicit_values(std::vector<cplx> values);
  static IndexFamily power(double c, double r, bool alternate = false);
  static IndexFamily geometric(double c, double rho, double r = 0.0, bool alternate = false);

  FamilyKind kind() const { return kind_; }
  bool is_explicit() const { return kind_ == FamilyKind::Explicit; }
  const std::vector<cplx>& values() const { return values_; }
  double c() const { return c_; }
  double r() const { return r_; }
  double rho() const { return rho_; }
  bool alternate() const { return alternate_; }

  // parametric families only
  double magnitude(double x) const;      // |c| x^r rho^x
  double log_magnitude(double x) const;  // log of the above, -inf for c == 0
  double signed_value(std::int64_t k) const;

  bool identically_zero() const;
  bool operator==(const IndexFamily&) const = default;

 private:
  FamilyKind kind_ = FamilyKind::Explicit;
  std::vector<cplx> values_;
  double c_ = 0.0;
  double r_ = 0.0;
  double rho_ = 1.0;
  bool alternate_ = false;
};

}  // namespace lpadm
