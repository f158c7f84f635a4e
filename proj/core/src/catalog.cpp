#include "lpadm/catalog.hpp"

#include <cmath>
#include <numbers>

#include "lpadm/errors.hpp"

namespace lpadm {

namespace {

constexpr double kPi = std::numbers::pi;

DiagonalSystem heat1d() {
  DiagonalSystem s;
  s.eigenvalues = IndexFamily::power(kPi * kPi, 2.0);
  s.coefficients = IndexFamily::power(std::sqrt(2.0) * kPi, 1.0, true);
  s.q = 2.0;
  return s;
}

PowerLawDensitySystem density(double gamma) {
  PowerLawDensitySystem s;
  s.gamma = gamma;
  return s;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"heat1d-dirichlet", "1D heat equation on (0,1), Dirichlet boundary control: lambda_k = -k^2 pi^2, b_k = (-1)^k sqrt2 k pi",
       "", 0.0, {{0.0, 4.0}}, "admissible exactly for p > 4; not 4-admissible"},
      {"heat-halfline-dirichlet", "heat equation on the half-line, Dirichlet control: spectral density |z|^{1/2}", "", 0.0,
       {{0.0, 4.0}}, "finite-time admissible for p > 4"},
      {"heat-halfline-neumann", "heat equation on the half-line, Neumann control: spectral density |z|^{-1/2}", "", 0.0,
       {{0.0, 4.0 / 3.0}}, "finite-time admissible for p > 4/3 (p >= 4/3 via a Besov embedding, recorded only)"},
      {"laplacian-Rn", "heat equation on R^n with point-type control: spectral density |z|^{n/2-1}", "n", 3.0,
       {{1.0, 4.0 / 3.0}, {2.0, 2.0}, {3.0, 4.0}}, "finite-time admissible for p > 4/(4-n)"},
      {"counterexample-geometric-small-p",
       "lambda_k = -2^k, b_k = 2^{k/p'}: p-admissible (p < 2) although b is not in X_{-1/p'}", "p", 1.5, {},
       "admissible at its own p; the X_{-1/p'} membership sum diverges"},
      {"counterexample-geometric-large-p",
       "lambda_k = -2^k, b_k = k^{-1/2} 2^{k/p'}: p-admissible (p > 2) although b is not in X_{-1/p'}", "p", 3.0, {},
       "admissible at its own p; the X_{-1/p'} membership sum diverges"},
      {"weiss-counterexample", "heat1d-dirichlet with the closed-form resolvent identity enabled", "", 0.0, {{0.0, 4.0}},
       "4-Weiss property is violated: the resolvent condition holds at p = 4 but B is not 4-admissible"},
  };
  return entries;
}

bool in_catalog(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return true;
  return false;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  fail(ErrorCode::NotFound, "no catalog entry named '" + name + "'");
}

SystemDescriptor catalog_system(const std::string& name, std::optional<double> parameter) {
  const auto& entry = catalog_entry(name);
  if (parameter && entry.parameter.empty()) fail(ErrorCode::InvalidSystem, name + " takes no parameter");
  const double par = parameter.value_or(entry.default_parameter);
  SystemDescriptor d;
  if (name == "heat1d-dirichlet" || name == "weiss-counterexample") {
    d = describe(heat1d(), name);
    d.weiss_identity = name == "weiss-counterexample";
  } else if (name == "heat-halfline-dirichlet") {
    d = describe(density(0.5), name);
  } else if (name == "heat-halfline-neumann") {
    d = describe(density(-0.5), name);
  } else if (name == "laplacian-Rn") {
    if (par != 1.0 && par != 2.0 && par != 3.0) fail(ErrorCode::OutOfRange, "laplacian-Rn needs n in {1, 2, 3}");
    d = describe(density(par / 2.0 - 1.0), name + " (n=" + fmt(par) + ")");
  } else {
    const bool small = name == "counterexample-geometric-small-p";
    if (small && !(par > 1.0 && par <= 2.0)) fail(ErrorCode::OutOfRange, "small-p counterexample needs p in (1, 2]");
    if (!small && !(par > 2.0 && std::isfinite(par))) fail(ErrorCode::OutOfRange, "large-p counterexample needs p in (2, inf)");
    const double pc = par / (par - 1.0);
    DiagonalSystem s;
    s.eigenvalues = IndexFamily::geometric(1.0, 2.0);
    s.coefficients = IndexFamily::geometric(1.0, std::pow(2.0, 1.0 / pc), small ? 0.0 : -0.5);
    d = describe(s, name + " (p=" + fmt(par) + ")");
  }
  d.note = entry.note;
  d.citation = entry.summary;
  for (const auto& [par_value, p_star] : entry.thresholds)
    if (entry.parameter.empty() || par_value == par) d.known_threshold = p_star;
  if (name == "heat-halfline-neumann") d.remarks.push_back("threshold p >= 4/3 is metadata only");
  if (d.weiss_identity) d.remarks.push_back("closed form: mu sum 2n^2pi^2/(mu^2+n^2pi^2)^2 = (coth mu - mu csch^2 mu)/2");
  return d;
}

}  // namespace lpadm
