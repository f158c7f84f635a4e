#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpadm/measure.hpp"
#include "lpadm/model.hpp"
#include "lpadm/series.hpp"

namespace lpadm {

enum class Evidence { AdmissibleEvidence, NotAdmissibleEvidence, Inconclusive };
enum class Sufficiency { Sufficient, Necessary, Equivalent };
enum class WeissRule { Equivalent, SufficientOnly, Unknown };

std::string to_string(Evidence e);
std::string to_string(Sufficiency s);
std::string to_string(WeissRule w);

struct CriterionReport {
  std::string id;
  Evidence verdict = Evidence::Inconclusive;
  double witness = 0.0;
  double growth = 0.0;  // edge slope or tail exponent, whichever the criterion regresses
  std::optional<SeriesVerdict> series;
  Sufficiency sufficiency = Sufficiency::Sufficient;
  std::vector<std::string> notes;
};

// --- fractional membership -------------------------------------------------

struct MembershipOptions {
  std::int64_t terms = 1'000'000;  // truncation for infinite families
  int window_samples = 64;
};

// sum_k |b_k|^q |lambda_k|^{-beta q}
SeriesVerdict sobolev_membership(const DiagonalSystem& s, double beta, const MembershipOptions& opts = {});
SeriesVerdict sobolev_membership(const SystemDescriptor& s, double beta, const MembershipOptions& opts = {});

struct InterpolationResult {
  double beta = 0.0;
  double p = 1.0;
};

InterpolationResult interpolation_threshold(const DiagonalSystem& s, double tol = 1e-6,
                                            const MembershipOptions& opts = {});

// --- Carleson geometry -----------------------------------------------------

struct ScanWindow {
  int j_min = -20;  // dyadic scales a = 2^j
  int j_max = 60;
  int n_min = -20;  // strips S_n
  int n_max = 80;
  int tail_points = 20;
};

// w with its upper scales clipped to what mu resolves; squares or strips past
// the tail's index cap would read as empty
ScanWindow resolved_window(const HalfPlaneMeasure& mu, ScanWindow w);

struct GeometryContext {
  bool sector_ok = true;  // sector hypothesis holds (real spectrum or a sector angle)
};

struct SquareProfile {
  std::vector<double> scales;  // a = 2^j
  std::vector<double> ratios;  // mu(Q_I) / |I|^{q/p'}
};

SquareProfile square_ratio_profile(const HalfPlaneMeasure& mu, double p, double q, const ScanWindow& w = {});
CriterionReport carleson_square_criterion(const HalfPlaneMeasure& mu, double p, double q, const ScanWindow& w = {},
                                          const GeometryContext& ctx = {});

// strip masses mu(S_n) for n in [n_min, n_max]
std::vector<double> strip_masses(const HalfPlaneMeasure& mu, const ScanWindow& w = {});
CriterionReport dyadic_strip_criterion(const HalfPlaneMeasure& mu, double p, double q, const ScanWindow& w = {},
                                       const GeometryContext& ctx = {});
CriterionReport dyadic_strip_criterion(const std::vector<double>& masses, double p, double q,
                                       const ScanWindow& w = {}, const GeometryContext& ctx = {});

// --- resolvent --------------------------------------------------------------

// ||R(lambda, A) b||^q on a log grid, independent of p
struct ResolventProfile {
  std::vector<double> lambdas;
  std::vector<double> norms_q;
  double q = 2.0;
};

struct ResolventGrid {
  double lo = 1e-3;
  double hi = 1e6;
  int per_decade = 10;
};

double resolvent_norm_q(const HalfPlaneMeasure& mu, double q, double lambda);
ResolventProfile resolvent_profile(const HalfPlaneMeasure& mu, double q, const ResolventGrid& grid = {});

CriterionReport resolvent_weiss_sup(const SystemDescriptor& s, double p, const MeasureOptions& mopts = {});
CriterionReport resolvent_weiss_sup(const SystemDescriptor& s, const HalfPlaneMeasure& mu,
                                    const ResolventProfile& profile, double p);

WeissRule weiss_rule_applicable(const SystemDescriptor& s, double p);

// --- Favard norms and power-law threshold --------------------------------------

enum class FavardLevel {
  State,        // sup lambda^alpha ||A R(lambda, A) b||_X
  Extrapolated  // the same in X_{-1}, i.e. sup lambda^alpha ||R(lambda, A) b||_X
};

struct FavardResult {
  double value = 0.0;
  bool infinite = false;
  double edge_slope = 0.0;
};

FavardResult favard_norm(const DiagonalSystem& s, double alpha, FavardLevel level = FavardLevel::State,
                         const MeasureOptions& mopts = {});

double power_law_threshold(double gamma);

}  // namespace lpadm
