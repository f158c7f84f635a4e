#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpadm/criteria.hpp"
#include "lpadm/measure.hpp"
#include "lpadm/model.hpp"

namespace lpadm {

enum class Admissible { Yes, No, Unknown };
enum class TimeScope { FiniteTime, InfiniteTime };

std::string to_string(Admissible a);
std::string to_string(TimeScope t);

struct Contradiction {
  std::string rule;
  std::string first;
  std::string second;
  double p = 0.0;
  std::string detail;
};

struct Verdict {
  double p = 0.0;
  Admissible admissible = Admissible::Unknown;
  TimeScope time_scope = TimeScope::InfiniteTime;
  double applied_shift = 0.0;
  std::vector<CriterionReport> evidence;
  std::vector<Contradiction> contradictions;
  std::vector<std::string> advisories;

  const CriterionReport* find(const std::string& id) const;
};

struct AnalyzerOptions {
  MeasureOptions measure;
  ScanWindow window;
  ResolventGrid grid;
  MembershipOptions membership;
  double interpolation_tol = 1e-6;
  double auto_shift = 1.0;  // applied to power-law systems with sigma = 0
  bool embedding_advisory = true;
  bool oracle_crosscheck = false;
  double oracle_t_max = 64.0;
};

// Caches everything that does not depend on p.
class Analyzer {
 public:
  explicit Analyzer(SystemDescriptor system, AnalyzerOptions opts = {});
  // analyze against a caller-supplied measure (audits of corrupted data)
  Analyzer(SystemDescriptor system, HalfPlaneMeasure measure, AnalyzerOptions opts = {});

  Verdict analyze(double p);

  const SystemDescriptor& original() const { return original_; }
  const SystemDescriptor& system() const { return system_; }
  const AnalyzerOptions& options() const { return opts_; }
  const HalfPlaneMeasure& measure();
  const std::vector<double>& strips();
  const ResolventProfile& resolvent();
  // nullopt when not diagonal or when b lies in no X_{-beta}
  const std::optional<InterpolationResult>& interpolation();

 private:
  bool zero_operator();
  SystemDescriptor original_;
  SystemDescriptor system_;
  AnalyzerOptions opts_;
  std::optional<HalfPlaneMeasure> measure_;
  std::optional<std::vector<double>> strips_;
  std::optional<ResolventProfile> resolvent_;
  std::optional<std::optional<InterpolationResult>> interp_;
};

Verdict analyze(const SystemDescriptor& s, double p, const AnalyzerOptions& opts = {});

struct ThresholdScan {
  double p_low = 0.0;
  double p_high = 0.0;
  double p_star = 0.0;
  double resolution = 0.0;
  Admissible low_verdict = Admissible::No;
  std::vector<Verdict> trace;
};

ThresholdScan threshold_scan(Analyzer& a, double p_min, double p_max, double resolution);
ThresholdScan threshold_scan(const SystemDescriptor& s, double p_min, double p_max, double resolution,
                             const AnalyzerOptions& opts = {});

std::vector<Contradiction> consistency_audit(Analyzer& a, const std::vector<double>& p_grid);
std::vector<Contradiction> consistency_audit(const SystemDescriptor& s, const std::vector<double>& p_grid,
                                             const AnalyzerOptions& opts = {});

std::vector<double> default_audit_grid();

}  // namespace lpadm
