#include "lpadm/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lpadm/errors.hpp"
#include "lpadm/oracle.hpp"

namespace lpadm {

namespace {

bool supports_yes(const CriterionReport& r) {
  return r.verdict == Evidence::AdmissibleEvidence &&
         (r.sufficiency == Sufficiency::Sufficient || r.sufficiency == Sufficiency::Equivalent);
}

bool supports_no(const CriterionReport& r) {
  return r.verdict == Evidence::NotAdmissibleEvidence &&
         (r.sufficiency == Sufficiency::Equivalent || r.sufficiency == Sufficiency::Necessary);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool sector_ok(const SystemDescriptor& s) {
  if (const auto* d = std::get_if<DiagonalSystem>(&s.system)) return d->real_spectrum() || d->sector_angle.has_value();
  if (const auto* m = std::get_if<MultiplierSystem>(&s.system))
    return std::all_of(m->atoms.begin(), m->atoms.end(), [](const auto& a) { return a.symbol.imag() == 0.0; });
  return true;
}

SystemDescriptor prepare(SystemDescriptor s, const AnalyzerOptions& opts) {
  validate(s);
  if (const auto* pl = std::get_if<PowerLawDensitySystem>(&s.system); pl && pl->sigma == 0.0)
    s = shift_system(s, opts.auto_shift);
  return s;
}

}  // namespace

std::string to_string(Admissible a) {
  switch (a) {
    case Admissible::Yes: return "Yes";
    case Admissible::No: return "No";
    case Admissible::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(TimeScope t) { return t == TimeScope::FiniteTime ? "FiniteTime" : "InfiniteTime"; }

const CriterionReport* Verdict::find(const std::string& id) const {
  for (const auto& r : evidence)
    if (r.id == id) return &r;
  return nullptr;
}

Analyzer::Analyzer(SystemDescriptor system, AnalyzerOptions opts)
    : original_(system), system_(prepare(std::move(system), opts)), opts_(std::move(opts)) {}

Analyzer::Analyzer(SystemDescriptor system, HalfPlaneMeasure measure, AnalyzerOptions opts)
    : original_(system), system_(prepare(std::move(system), opts)), opts_(std::move(opts)), measure_(std::move(measure)) {}

const HalfPlaneMeasure& Analyzer::measure() {
  if (!measure_) measure_ = build_measure(system_, opts_.measure);
  return *measure_;
}

const std::vector<double>& Analyzer::strips() {
  if (!strips_) strips_ = strip_masses(measure(), resolved_window(measure(), opts_.window));
  return *strips_;
}

const ResolventProfile& Analyzer::resolvent() {
  if (!resolvent_) resolvent_ = resolvent_profile(measure(), system_.q(), opts_.grid);
  return *resolvent_;
}

const std::optional<InterpolationResult>& Analyzer::interpolation() {
  if (!interp_) {
    std::optional<InterpolationResult> r;
    if (const auto* d = std::get_if<DiagonalSystem>(&system_.system); d && !d->zero_coefficients()) {
      try {
        r = interpolation_threshold(*d, opts_.interpolation_tol, opts_.membership);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoMembership) throw;
      }
    }
    interp_ = r;
  }
  return *interp_;
}

bool Analyzer::zero_operator() {
  const auto& mu = measure();
  if (mu.density()) return false;
  if (!mu.atoms().empty()) return false;
  if (mu.tail()) return mu.tail()->system().zero_coefficients();
  return true;
}

Verdict Analyzer::analyze(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) fail(ErrorCode::OutOfRange, "p must lie in (1, inf), got " + fmt(p));
  Verdict v;
  v.p = p;
  v.applied_shift = system_.applied_shift;
  v.time_scope = system_.applied_shift > 0.0 ? TimeScope::FiniteTime : TimeScope::InfiniteTime;
  if (system_.applied_shift > 0.0)
    v.advisories.push_back("generator shifted by " + fmt(system_.applied_shift) + ": verdict is finite-time for the original system");

  if (zero_operator()) {
    CriterionReport r;
    r.id = "zero-operator";
    r.verdict = Evidence::AdmissibleEvidence;
    r.sufficiency = Sufficiency::Sufficient;
    r.notes.push_back("control operator is zero");
    v.evidence.push_back(r);
    v.admissible = Admissible::Yes;
    return v;
  }

  const double q = system_.q();
  const GeometryContext ctx{sector_ok(system_)};

  if (const auto* pl = std::get_if<PowerLawDensitySystem>(&system_.system)) {
    CriterionReport r;
    r.id = "power-law-threshold";
    r.sufficiency = Sufficiency::Sufficient;
    r.witness = power_law_threshold(pl->gamma);
    r.verdict = p > r.witness ? Evidence::AdmissibleEvidence : Evidence::Inconclusive;
    if (r.verdict == Evidence::Inconclusive) r.notes.push_back("below the Hoelder threshold: no conclusion from this direction");
    v.evidence.push_back(r);
  } else {
    if (std::holds_alternative<DiagonalSystem>(system_.system)) {
      CriterionReport r;
      r.id = "interpolation";
      r.sufficiency = Sufficiency::Sufficient;
      const auto& it = interpolation();
      if (it) {
        r.witness = it->p;
        r.growth = it->beta;
        r.verdict = p > it->p ? Evidence::AdmissibleEvidence : Evidence::Inconclusive;
        r.notes.push_back("beta* = " + fmt(it->beta));
      } else {
        r.verdict = Evidence::Inconclusive;
        r.notes.push_back("b lies in no X_{-beta} with beta < 1");
      }
      v.evidence.push_back(r);
    }
    if (p <= q)
      v.evidence.push_back(carleson_square_criterion(measure(), p, q, opts_.window, ctx));
    else
      v.evidence.push_back(dyadic_strip_criterion(strips(), p, q, resolved_window(measure(), opts_.window), ctx));
  }

  const auto res = resolvent_weiss_sup(system_, measure(), resolvent(), p);
  v.evidence.push_back(res);

  if (opts_.embedding_advisory) {
    // exponential probes: ratio(lambda) = (p lambda)^{1/p} ||R(lambda)b||, so the trend is the resolvent edge slope
    v.advisories.push_back("embedding trend " + fmt(res.growth) + " along exponential probes (heuristic)");
    for (const auto& r : v.evidence)
      if (r.sufficiency == Sufficiency::Equivalent && r.verdict == Evidence::NotAdmissibleEvidence && r.id != "resolvent" &&
          res.growth < -0.05)
        v.advisories.push_back("embedding probes look bounded although " + r.id + " reports unboundedness");
  }
  if (opts_.oracle_crosscheck) {
    if (const auto* d = std::get_if<DiagonalSystem>(&system_.system)) {
      const auto prof = constant_growth_profile(*d, p, dyadic_times(opts_.oracle_t_max));
      v.advisories.push_back("oracle profile " + to_string(prof.classification) + " (slope " + fmt(prof.terminal_slope) + ")");
    }
  }

  const CriterionReport* yes = nullptr;
  const CriterionReport* no = nullptr;
  for (const auto& r : v.evidence) {
    if (!yes && supports_yes(r)) yes = &r;
    if (!no && supports_no(r)) no = &r;
  }
  if (yes && no) {
    v.contradictions.push_back({"fusion", yes->id, no->id, p,
                                yes->id + " supports admissibility while " + no->id + " rules it out"});
    v.admissible = Admissible::Unknown;
  } else if (yes) {
    v.admissible = Admissible::Yes;
  } else if (no) {
    v.admissible = Admissible::No;
  }
  return v;
}

Verdict analyze(const SystemDescriptor& s, double p, const AnalyzerOptions& opts) {
  Analyzer a(s, opts);
  return a.analyze(p);
}

ThresholdScan threshold_scan(Analyzer& a, double p_min, double p_max, double resolution) {
  if (!(p_min < p_max)) fail(ErrorCode::Precondition, "p_min must be below p_max");
  if (!(resolution > 0.0)) fail(ErrorCode::Precondition, "resolution must be positive");
  ThresholdScan scan;
  scan.resolution = resolution;
  auto lo = a.analyze(p_min);
  auto hi = a.analyze(p_max);
  scan.trace.push_back(lo);
  scan.trace.push_back(hi);
  if (lo.admissible == Admissible::Yes || hi.admissible != Admissible::Yes)
    fail(ErrorCode::NoBracket, "no No->Yes bracket on [" + fmt(p_min) + ", " + fmt(p_max) + "]: verdicts " +
                                   to_string(lo.admissible) + " and " + to_string(hi.admissible));
  double pl = p_min, ph = p_max;
  scan.low_verdict = lo.admissible;
  // Unknown sits on the lower side: Yes is the only verdict that moves the upper end
  while (ph - pl > resolution) {
    const double mid = 0.5 * (pl + ph);
    auto v = a.analyze(mid);
    if (v.admissible == Admissible::Yes) {
      ph = mid;
    } else {
      pl = mid;
      scan.low_verdict = v.admissible;
    }
    scan.trace.push_back(std::move(v));
  }
  scan.p_low = pl;
  scan.p_high = ph;
  scan.p_star = 0.5 * (pl + ph);
  return scan;
}

ThresholdScan threshold_scan(const SystemDescriptor& s, double p_min, double p_max, double resolution,
                             const AnalyzerOptions& opts) {
  Analyzer a(s, opts);
  return threshold_scan(a, p_min, p_max, resolution);
}

std::vector<double> default_audit_grid() { return {1.2, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 6.0}; }

std::vector<Contradiction> consistency_audit(Analyzer& a, const std::vector<double>& p_grid) {
  std::vector<Contradiction> out;
  const auto& mu = a.measure();

  // measure sanity
  for (std::size_t i = 0; i < mu.atoms().size(); ++i) {
    const auto& at = mu.atoms()[i];
    if (!(at.mass > 0.0) || !(at.location.real() > 0.0)) {
      out.push_back({"measure-positivity", "measure", "atom " + std::to_string(i), 0.0,
                     "atom at " + fmt(at.location.real()) + " has mass " + fmt(at.mass)});
      break;
    }
  }
  const auto& w = a.options().window;
  const auto& strips = a.strips();
  double below = mu.atom_mass_below(std::ldexp(1.0, w.n_min - 1), 1e300) + mu.density_mass(0.0, std::ldexp(1.0, w.n_min - 1));
  double prev_square = 0.0;
  std::vector<double> cumulative;
  for (double m : strips) cumulative.push_back(below += m);
  for (int j = w.j_min; j <= w.j_max; ++j) {
    const double sq = square_mass(mu, std::ldexp(1.0, j));
    if (sq < prev_square * (1 - 1e-12)) {
      out.push_back({"square-monotonicity", "square_mass", "square_mass", 0.0, "mu(Q) decreases at a = 2^" + std::to_string(j)});
      break;
    }
    prev_square = sq;
    const int idx = j + 1 - w.n_min;
    if (idx >= 0 && idx < int(cumulative.size()) && sq > cumulative[std::size_t(idx)] * (1 + 1e-9) + 1e-300) {
      out.push_back({"strip-square", "square_mass", "strip_mass", 0.0,
                     "square mass exceeds the strip total at a = 2^" + std::to_string(j)});
      break;
    }
  }

  std::vector<Verdict> verdicts;
  for (double p : p_grid) {
    verdicts.push_back(a.analyze(p));
    const auto& v = verdicts.back();
    out.insert(out.end(), v.contradictions.begin(), v.contradictions.end());
    const auto* res = v.find("resolvent");
    const bool res_unbounded = res && res->verdict == Evidence::NotAdmissibleEvidence;
    for (const auto& r : v.evidence) {
      if (r.id != "resolvent" && r.sufficiency == Sufficiency::Equivalent && r.verdict == Evidence::AdmissibleEvidence &&
          res_unbounded)
        out.push_back({"equivalent-yes-needs-resolvent", r.id, "resolvent", p, "resolvent unbounded under an equivalent Yes"});
    }
    if (const auto& it = a.interpolation(); it && p > it->p && res_unbounded)
      out.push_back({"membership-vs-resolvent", "interpolation", "resolvent", p,
                     "b in X_{-beta} with p > 1/(1-beta) but the resolvent bound fails"});
  }
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    for (std::size_t j = 0; j < verdicts.size(); ++j) {
      if (!(verdicts[j].p > verdicts[i].p)) continue;
      if (verdicts[i].admissible == Admissible::Yes && verdicts[j].admissible == Admissible::No)
        out.push_back({"monotonicity", "p=" + fmt(verdicts[i].p), "p=" + fmt(verdicts[j].p), verdicts[j].p,
                       "Yes at smaller p followed by No"});
      const auto* ip = verdicts[i].find("interpolation");
      if (ip && ip->verdict == Evidence::AdmissibleEvidence) {
        for (const auto& r : verdicts[j].evidence)
          if (r.sufficiency == Sufficiency::Equivalent && r.verdict == Evidence::NotAdmissibleEvidence)
            out.push_back({"interpolation-monotone", "interpolation", r.id, verdicts[j].p,
                           "interpolation Yes at p=" + fmt(verdicts[i].p) + " but an equivalent No above"});
      }
    }
  }
  return out;
}

std::vector<Contradiction> consistency_audit(const SystemDescriptor& s, const std::vector<double>& p_grid,
                                             const AnalyzerOptions& opts) {
  Analyzer a(s, opts);
  return consistency_audit(a, p_grid);
}

}  // namespace lpadm
