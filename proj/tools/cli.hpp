#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

namespace lpadm::cli {

enum class Format { Text, Csv, Svg };

struct RunConfig {
  std::string command;
  std::string source;  // catalog name or system file
  std::optional<double> parameter;
  std::optional<double> p;
  std::optional<double> p_min;
  std::optional<double> p_max;
  double resolution = 0.02;
  std::int64_t k_max = 1'000'000;
  double t_max = 1024.0;
  double rate_min = 1e-3;
  double rate_max = 1e6;
  int per_decade = 4;
  std::string out_dir;  // empty: LPADM_OUT_DIR, then "."
  std::set<Format> formats{Format::Text};
  std::string catalog_name;
};

// exit codes: 0 success, 1 error or usage problem, 2 undecided (Unknown verdict, no bracket)
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_threshold(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_catalog(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_embed(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "x.xxxxxxxxxxxxxxxx" with 17 significant digits
std::string csv_number(double v);

}  // namespace lpadm::cli
