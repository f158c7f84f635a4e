#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpadm/embedding.hpp"
#include "lpadm/model.hpp"

namespace lpadm {

enum class ProfileClass { Plateau, Growing, Inconclusive };
std::string to_string(ProfileClass c);

struct OracleOptions {
  std::int64_t k_max = 20'000;  // modes summed directly; the rest by the tail integral
  double certify_rel = 1e-9;
};

struct StateResponse {
  double norm = 0.0;
  double tail = 0.0;        // contribution of modes past k_max (q-th power)
  double tail_error = 0.0;  // bound on the tail quadrature error (q-th power)
  bool certified = true;
};

// ||Phi_t u||_X
StateResponse state_response(const DiagonalSystem& s, const TestInput& u, double t, const OracleOptions& opts = {});

// probes for horizon t: mirrored exponentials (rate <= t^2) and mirrored
// indicators (t^-2 <= width <= t) drawn from fixed master grids
std::vector<TestInput> horizon_family(double t);

// sup over the family of ||Phi_t u|| / ||u||_{L^p[0,t]}
double admissibility_constant(const DiagonalSystem& s, double p, double t, const std::vector<TestInput>& family,
                              const OracleOptions& opts = {});
double admissibility_constant(const DiagonalSystem& s, double p, double t, const OracleOptions& opts = {});

// L^p norm on [0, t]
double lp_norm_on(const TestInput& u, double p, double t);

struct ConstantProfile {
  std::vector<double> times;
  std::vector<double> constants;
  ProfileClass classification = ProfileClass::Inconclusive;
  double terminal_slope = 0.0;
  bool certified = true;
};

inline constexpr double kPlateauSlope = 0.02;
inline constexpr double kGrowingSlope = 0.1;

std::vector<double> dyadic_times(double t_max);
ConstantProfile constant_growth_profile(const DiagonalSystem& s, double p, const std::vector<double>& times,
                                        const OracleOptions& opts = {});
ConstantProfile constant_growth_profile(const SystemDescriptor& s, double p, const std::vector<double>& times,
                                        const OracleOptions& opts = {});

// mu sum 2 n^2 pi^2 / (mu^2 + n^2 pi^2)^2 in closed form
double weiss_closed_form(double mu);
// the same sum truncated at n_max terms
double weiss_truncated_sum(double mu, std::int64_t n_max = 1'000'000);

struct DirectionScan {
  std::vector<double> constants;
  double sup = 0.0;
  std::size_t argmax = 0;
  std::vector<std::string> notes;
};

DirectionScan uniform_direction_scan(const std::vector<DiagonalSystem>& columns, double p, double t,
                                     const OracleOptions& opts = {});

}  // namespace lpadm
