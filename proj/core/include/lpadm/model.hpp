#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpadm/family.hpp"

namespace lpadm {

// Parametric eigenvalue families describe -lambda_k, i.e. lambda_k = -c k^r rho^k - shift.
// Explicit eigenvalue lists hold lambda_k directly (then minus shift).
struct DiagonalSystem {
  IndexFamily eigenvalues;
  IndexFamily coefficients;
  double q = 2.0;
  std::optional<double> sector_angle;
  std::int64_t first_index = 1;
  double shift = 0.0;

  bool finite() const;
  // number of modes for finite systems
  std::int64_t count() const;
  std::int64_t last_index() const { return first_index + count() - 1; }

  cplx lambda(std::int64_t k) const;
  cplx b(std::int64_t k) const;

  // parametric continuation at a real index (infinite systems)
  double neg_lambda_at(double x) const;  // -lambda(x) > 0
  double log_neg_lambda_at(double x) const;
  double log_abs_b_at(double x) const;

  bool real_spectrum() const;
  bool zero_coefficients() const;
};

// density c s^gamma on (sigma, inf), the reduced spectral density of a normal generator
struct PowerLawDensitySystem {
  double gamma = 0.0;
  double sigma = 0.0;
  double scale = 1.0;
  double q = 2.0;
};

struct MultiplierAtom {
  double weight = 1.0;
  cplx symbol;
  cplx coefficient;
};

struct MultiplierSystem {
  std::vector<MultiplierAtom> atoms;
  double q = 2.0;
};

using SystemVariant = std::variant<DiagonalSystem, PowerLawDensitySystem, MultiplierSystem>;

struct SystemDescriptor {
  std::string name;
  std::string note;
  std::string citation;
  std::optional<double> known_threshold;
  std::vector<std::string> remarks;
  bool weiss_identity = false;  // heat1d closed form applies
  double applied_shift = 0.0;   // total omega applied by shift_system
  SystemVariant system;

  bool is_diagonal() const { return std::holds_alternative<DiagonalSystem>(system); }
  bool is_power_law() const { return std::holds_alternative<PowerLawDensitySystem>(system); }
  bool is_multiplier() const { return std::holds_alternative<MultiplierSystem>(system); }
  double q() const;
};

SystemDescriptor describe(SystemVariant system, std::string name = {});

// Throws InvalidSystem / UnstableSpectrum / UnsupportedTail when invariants fail.
void validate(const DiagonalSystem& s);
void validate(const PowerLawDensitySystem& s);
void validate(const MultiplierSystem& s);
void validate(const SystemDescriptor& s);

SystemDescriptor shift_system(const SystemDescriptor& s, double omega);

// True when sup Re(lambda) < 0 without any shift (exponential stability).
bool exponentially_stable(const SystemDescriptor& s);

// |b|^q, shared by the diagonal and multiplier builds so both agree bitwise.
double coefficient_mass(cplx b, double q);

}  // namespace lpadm
