#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace lpadm::num {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;  // residual root mean square
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Quadratic least squares in centered coordinates; slope and curvature are the
// first and second derivative at the mean abscissa.
struct QuadFit {
  double center = 0.0;
  double slope = 0.0;
  double curvature = 0.0;
  double rms = 0.0;
};

QuadFit fit_quadratic(std::span<const double> x, std::span<const double> y);

std::vector<double> logspace(double lo, double hi, int per_decade);

struct Extremum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search for a maximum of f on [a, b] in the log of the argument.
Extremum golden_max_log(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-6, int max_iter = 200);

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

// Finite interval; endpoint singularities are fine (tanh-sinh).
Integral integrate(const std::function<double(double)>& f, double a, double b,
                   double rel_tol = 1e-10);

// (a, +inf) for decaying integrands (exp-sinh).
Integral integrate_to_infinity(const std::function<double(double)>& f, double a,
                               double rel_tol = 1e-10);

// expm1(z)/z with the removable singularity at 0 filled in.
std::complex<double> phi1(std::complex<double> z);
double phi1(double x);

class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace lpadm::num
