#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lpadm/model.hpp"
#include "lpadm/numerics.hpp"

namespace lpadm {

struct Atom {
  cplx location;
  double mass = 0.0;
  bool operator==(const Atom&) const = default;
};

// c s^gamma on (cutoff, inf)
struct PowerDensity {
  double gamma = 0.0;
  double scale = 1.0;
  double cutoff = 0.0;
  bool operator==(const PowerDensity&) const = default;
};

// Atoms of an infinite diagonal family past the materialized horizon.
// Locations -lambda(k) are real and increasing in k.
class FamilyTail {
 public:
  FamilyTail(DiagonalSystem system, std::int64_t first);

  std::int64_t first() const { return first_; }
  const DiagonalSystem& system() const { return sys_; }

  double location(double x) const { return sys_.neg_lambda_at(x); }
  double log_mass(double x) const { return sys_.q * sys_.log_abs_b_at(x); }
  double mass(std::int64_t k) const;

  // largest k >= first() - 1 with location(k) <= v (or < v when strict)
  std::int64_t last_index_at_most(double v, bool strict) const;
  double range_mass(std::int64_t k_lo, std::int64_t k_hi) const;
  double mass_in(double lo, double hi) const;  // location in (lo, hi]
  double mass_below(double x) const;           // location < x

  // sum over tail atoms of mass * exp(log_h(location)), via the integral of the
  // continuation from first - 1/2 (midpoint rule); error holds the midpoint bound.
  num::Integral sum_log(const std::function<double(double)>& log_h) const;

 private:
  double inverse_location(double v) const;
  DiagonalSystem sys_;
  std::int64_t first_;
  bool power_mass_ = false;
  double mass_c_ = 0.0;
  double mass_s_ = 0.0;
};

class HalfPlaneMeasure {
 public:
  HalfPlaneMeasure() = default;
  HalfPlaneMeasure(std::vector<Atom> atoms, std::optional<PowerDensity> density = std::nullopt,
                   std::optional<FamilyTail> tail = std::nullopt);
  // skips the positivity checks; only for building deliberately corrupted measures
  static HalfPlaneMeasure unchecked(std::vector<Atom> atoms, std::optional<PowerDensity> density = std::nullopt,
                                    std::optional<FamilyTail> tail = std::nullopt);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::optional<PowerDensity>& density() const { return density_; }
  const std::optional<FamilyTail>& tail() const { return tail_; }

  bool empty() const { return atoms_.empty() && !density_ && !tail_; }
  bool real_supported() const { return real_; }
  double max_off_axis_ratio() const;  // max |Im s| / Re s over atoms

  double atom_mass_in(double lo, double hi) const;             // Re in (lo, hi]
  double atom_mass_below(double x, double im_bound) const;     // 0 < Re < x, |Im| <= im_bound
  double density_mass(double lo, double hi) const;             // (lo, hi] cut to (cutoff, inf)

  // integral of exp(log_h(s)) dmu over atoms, tail and density
  struct Integration {
    double value = 0.0;
    double atoms = 0.0;
    double tail = 0.0;
    double density = 0.0;
    double tail_error = 0.0;
  };
  Integration integrate_log(const std::function<double(cplx)>& log_h_atom,
                            const std::function<double(double)>& log_h_real, double split_hint,
                            double rel_tol = 1e-10) const;

  // density part of the above; +inf when the integrand decays too slowly
  num::Integral density_integral_log(const std::function<double(double)>& log_h_real, double split_hint,
                                     double rel_tol = 1e-10) const;

  // smallest real part carrying mass (0 if the density reaches down to 0)
  double support_start() const;
  // real part beyond which the tail is no longer represented (inf if exact)
  double resolved_limit() const;

 private:
  void index();
  std::vector<Atom> atoms_;
  std::vector<double> re_;
  std::vector<long double> prefix_{0.0L};
  std::optional<PowerDensity> density_;
  std::optional<FamilyTail> tail_;
  bool real_ = true;
};

struct MeasureOptions {
  std::int64_t k_max = 1'000'000;
};

HalfPlaneMeasure build_measure(const SystemDescriptor& system, const MeasureOptions& opts = {});
HalfPlaneMeasure build_measure(const DiagonalSystem& system, const MeasureOptions& opts = {});
HalfPlaneMeasure build_measure(const MultiplierSystem& system);
HalfPlaneMeasure build_measure(const PowerLawDensitySystem& system);

double square_mass(const HalfPlaneMeasure& mu, double a);
double strip_mass(const HalfPlaneMeasure& mu, int n);

}  // namespace lpadm
