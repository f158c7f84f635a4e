#pragma once

#include <span>
#include <string>

namespace lpadm {

enum class Convergence { Convergent, Divergent, Inconclusive };
enum class TermMode { Power, Geometric };

std::string to_string(Convergence c);
std::string to_string(TermMode m);

inline constexpr double kMarginTolerance = 0.05;
// exponents this close above the boundary count as "on" it
inline constexpr double kBoundaryEps = 1e-6;

struct SeriesVerdict {
  Convergence classification = Convergence::Inconclusive;
  double partial_value = 0.0;
  double tail_exponent = 0.0;
  double margin = 0.0;  // |tail_exponent - boundary|
  double boundary = -1.0;
  TermMode mode = TermMode::Power;
  std::string rule;
};

struct TailFit {
  TermMode mode = TermMode::Power;
  double exponent = 0.0;
  double boundary = -1.0;
  bool degenerate = false;  // fewer than three positive terms
  bool all_zero = false;
};

// index must be positive and increasing; log_terms may hold -inf for zero terms
TailFit fit_tail(std::span<const double> index, std::span<const double> log_terms);

// exponent strictly below the boundary, ignoring the margin
inline bool raw_convergent(const TailFit& f) { return f.all_zero || (!f.degenerate && f.exponent < f.boundary - kBoundaryEps); }

SeriesVerdict classify(const TailFit& fit, double partial_value);
SeriesVerdict classify(std::span<const double> index, std::span<const double> log_terms, double partial_value);

// worst of two tails: Divergent dominates, then Inconclusive
SeriesVerdict combine_tails(const SeriesVerdict& right, const SeriesVerdict& left);

}  // namespace lpadm
