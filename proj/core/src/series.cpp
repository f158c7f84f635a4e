#include "lpadm/series.hpp"

#include <cmath>
#include <vector>

#include "lpadm/numerics.hpp"

namespace lpadm {

std::string to_string(Convergence c) {
  switch (c) {
    case Convergence::Convergent: return "Convergent";
    case Convergence::Divergent: return "Divergent";
    case Convergence::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(TermMode m) { return m == TermMode::Power ? "power" : "geometric"; }

TailFit fit_tail(std::span<const double> index, std::span<const double> log_terms) {
  std::vector<double> n, ln, y;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (!std::isfinite(log_terms[i])) continue;
    n.push_back(index[i]);
    ln.push_back(std::log(index[i]));
    y.push_back(log_terms[i]);
  }
  TailFit f;
  if (n.empty()) {
    f.all_zero = true;
    return f;
  }
  if (n.size() < 3) {
    f.degenerate = true;
    return f;
  }
  const auto q = num::fit_quadratic(ln, y);
  // geometric terms log t = s n look like s e^u in u = ln n: curvature tracks slope
  const bool geometric = std::abs(q.curvature) > 1e-6 && std::abs(q.curvature) > 0.5 * std::abs(q.slope - q.curvature);
  if (geometric) {
    f.mode = TermMode::Geometric;
    f.exponent = num::fit_line(n, y).slope;
    f.boundary = 0.0;
  } else {
    f.mode = TermMode::Power;
    f.exponent = num::fit_line(ln, y).slope;
    f.boundary = -1.0;
  }
  return f;
}

SeriesVerdict classify(const TailFit& fit, double partial_value) {
  SeriesVerdict v;
  v.partial_value = partial_value;
  v.mode = fit.mode;
  v.boundary = fit.boundary;
  v.tail_exponent = fit.exponent;
  if (fit.all_zero) {
    v.classification = Convergence::Convergent;
    v.rule = "zero tail";
    v.margin = 0.0;
    return v;
  }
  if (fit.degenerate) {
    v.classification = Convergence::Inconclusive;
    v.rule = "too few nonzero terms";
    return v;
  }
  v.margin = std::abs(fit.exponent - fit.boundary);
  if (fit.exponent < fit.boundary - kMarginTolerance) {
    v.classification = Convergence::Convergent;
    v.rule = "tail regression";
  } else if (fit.exponent > fit.boundary + kMarginTolerance) {
    v.classification = Convergence::Divergent;
    v.rule = "tail regression";
  } else if (fit.exponent >= fit.boundary - kBoundaryEps) {
    // on the boundary: harmonic comparison (power) or terms not tending to zero (geometric)
    v.classification = Convergence::Divergent;
    v.rule = fit.mode == TermMode::Power ? "comparison with the harmonic series" : "terms do not tend to zero";
  } else {
    v.classification = Convergence::Inconclusive;
    v.rule = "inside margin";
  }
  return v;
}

SeriesVerdict classify(std::span<const double> index, std::span<const double> log_terms, double partial_value) {
  return classify(fit_tail(index, log_terms), partial_value);
}

SeriesVerdict combine_tails(const SeriesVerdict& right, const SeriesVerdict& left) {
  auto rank = [](Convergence c) { return c == Convergence::Divergent ? 2 : c == Convergence::Inconclusive ? 1 : 0; };
  SeriesVerdict out = rank(left.classification) > rank(right.classification) ? left : right;
  out.partial_value = right.partial_value;
  if (rank(left.classification) > rank(right.classification)) out.rule = "left tail: " + left.rule;
  return out;
}

}  // namespace lpadm
