#pragma once

#include <string>
#include <vector>

namespace lpadm::plot {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool markers_only = false;
};

struct Axes {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  bool logx = false;
  bool logy = false;
};

// static SVG line chart; non-finite points and nonpositive values on log axes are skipped
std::string svg(const Axes& axes, const std::vector<Series>& series);

}  // namespace lpadm::plot
