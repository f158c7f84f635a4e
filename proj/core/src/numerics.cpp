#include "lpadm/numerics.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lpadm::num {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw std::invalid_argument("fit_line: need two or more points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / double(n));
  return fit;
}

QuadFit fit_quadratic(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 3) throw std::invalid_argument("fit_quadratic: need three or more points");
  double mx = 0.0;
  for (double v : x) mx += v;
  mx /= double(n);
  // normal equations for y = a + b u + c u^2 with u = x - mx
  double s[5] = {0, 0, 0, 0, 0};
  double t[3] = {0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const double u = x[i] - mx;
    double pw = 1.0;
    for (int k = 0; k < 5; ++k) {
      s[k] += pw;
      if (k < 3) t[k] += pw * y[i];
      pw *= u;
    }
  }
  double m[3][4] = {{s[0], s[1], s[2], t[0]}, {s[1], s[2], s[3], t[1]}, {s[2], s[3], s[4], t[2]}};
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    for (int k = 0; k < 4; ++k) std::swap(m[c][k], m[piv][k]);
    if (m[c][c] == 0.0) throw std::runtime_error("fit_quadratic: singular system");
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  const double a = m[0][3] / m[0][0];
  const double b = m[1][3] / m[1][1];
  const double cc = m[2][3] / m[2][2];
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = x[i] - mx;
    const double r = y[i] - (a + b * u + cc * u * u);
    ss += r * r;
  }
  return QuadFit{mx, b, 2.0 * cc, std::sqrt(ss / double(n))};
}

std::vector<double> logspace(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi >= lo) || per_decade < 1) throw std::invalid_argument("logspace: bad range");
  const double l0 = std::log10(lo), l1 = std::log10(hi);
  const int steps = std::max(1, int(std::lround((l1 - l0) * per_decade)));
  std::vector<double> out;
  out.reserve(std::size_t(steps) + 1);
  for (int i = 0; i <= steps; ++i) out.push_back(std::pow(10.0, l0 + (l1 - l0) * double(i) / steps));
  out.front() = lo;
  out.back() = hi;
  return out;
}

Extremum golden_max_log(const std::function<double(double)>& f, double a, double b, double rel_tol,
                        int max_iter) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double la = std::log(a), lb = std::log(b);
  double l1 = lb - g * (lb - la), l2 = la + g * (lb - la);
  double f1 = f(std::exp(l1)), f2 = f(std::exp(l2));
  for (int it = 0; it < max_iter && (lb - la) > rel_tol; ++it) {
    if (f1 < f2) {
      la = l1;
      l1 = l2;
      f1 = f2;
      l2 = la + g * (lb - la);
      f2 = f(std::exp(l2));
    } else {
      lb = l2;
      l2 = l1;
      f2 = f1;
      l1 = lb - g * (lb - la);
      f1 = f(std::exp(l1));
    }
  }
  return f1 > f2 ? Extremum{std::exp(l1), f1} : Extremum{std::exp(l2), f2};
}

Integral integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  if (!(b > a)) return {};
  boost::math::quadrature::tanh_sinh<double> q;
  double err = 0.0, l1 = 0.0;
  const double v = q.integrate(f, a, b, rel_tol, &err, &l1);
  return {v, err * std::abs(l1)};
}

Integral integrate_to_infinity(const std::function<double(double)>& f, double a, double rel_tol) {
  boost::math::quadrature::exp_sinh<double> q;
  double err = 0.0, l1 = 0.0;
  const double v = q.integrate(f, a, std::numeric_limits<double>::infinity(), rel_tol, &err, &l1);
  return {v, err * std::abs(l1)};
}

std::complex<double> phi1(std::complex<double> z) {
  if (std::abs(z) < 1e-3) {
    // 1 + z/2 + z^2/6 + z^3/24 + z^4/120
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0)));
  }
  if (z.imag() == 0.0) return std::expm1(z.real()) / z.real();
  return (std::exp(z) - 1.0) / z;
}

double phi1(double x) {
  if (x == 0.0) return 1.0;
  return std::expm1(x) / x;
}

}  // namespace lpadm::num
