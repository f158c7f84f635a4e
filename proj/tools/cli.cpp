#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lpadm/analyzer.hpp"
#include "lpadm/catalog.hpp"
#include "lpadm/embedding.hpp"
#include "lpadm/errors.hpp"
#include "lpadm/oracle.hpp"
#include "lpadm/system_io.hpp"
#include "plot.hpp"

namespace lpadm::cli {

namespace {

bool wants(const RunConfig& c, Format f) { return c.formats.count(f) > 0; }

std::string out_dir(const RunConfig& c) {
  if (!c.out_dir.empty()) return c.out_dir;
  if (const char* env = std::getenv("LPADM_OUT_DIR"); env && *env) return env;
  return ".";
}

std::string slug(const std::string& name) {
  std::string s;
  for (char ch : name) {
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '.') s += ch;
    else if (!s.empty() && s.back() != '-') s += '-';
  }
  while (!s.empty() && (s.back() == '-' || s.back() == '.')) s.pop_back();
  return s.empty() ? "system" : s;
}

std::string short_num(double v) {
  std::ostringstream o;
  o << std::setprecision(6) << v;
  return o.str();
}

std::string write_artifact(const RunConfig& c, const std::string& name, const std::string& content) {
  const std::filesystem::path dir = out_dir(c);
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::NotFound, "cannot write " + path.string());
  f << content;
  return path.string();
}

AnalyzerOptions analyzer_options(const RunConfig& c) {
  AnalyzerOptions o;
  o.measure.k_max = c.k_max;
  return o;
}

SystemDescriptor load(const RunConfig& c) {
  if (c.source.empty()) fail(ErrorCode::Precondition, "no system given (positional, --system or --name)");
  return resolve_system(c.source, c.parameter);
}

void print_verdict(std::ostream& out, const SystemDescriptor& s, const Verdict& v) {
  out << "system      " << s.name << "\n";
  out << "p           " << short_num(v.p) << "\n";
  out << "verdict     " << to_string(v.admissible) << " (" << to_string(v.time_scope) << ")\n";
  out << "\n" << std::left << std::setw(22) << "criterion" << std::setw(24) << "verdict" << std::setw(13) << "sufficiency"
      << std::setw(14) << "witness" << "growth\n";
  for (const auto& r : v.evidence) {
    out << std::setw(22) << r.id << std::setw(24) << to_string(r.verdict) << std::setw(13) << to_string(r.sufficiency)
        << std::setw(14) << short_num(r.witness) << short_num(r.growth) << "\n";
    if (r.series)
      out << "    series: " << to_string(r.series->classification) << ", " << to_string(r.series->mode) << " tail exponent "
          << short_num(r.series->tail_exponent) << ", " << r.series->rule << "\n";
    for (const auto& n : r.notes) out << "    note: " << n << "\n";
  }
  out << std::right;
  if (v.contradictions.empty()) out << "\ncontradictions: none\n";
  for (const auto& c : v.contradictions) out << "\ncontradiction [" << c.rule << "]: " << c.detail << "\n";
  for (const auto& a : v.advisories) out << "advisory: " << a << "\n";
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::NoBracket ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.p) fail(ErrorCode::Precondition, "analyze needs --p");
    const auto s = load(cfg);
    Analyzer a(s, analyzer_options(cfg));
    const auto v = a.analyze(*cfg.p);
    if (wants(cfg, Format::Text)) print_verdict(out, s, v);
    if (wants(cfg, Format::Csv)) {
      std::ostringstream csv;
      csv << "criterion,verdict,sufficiency,witness,growth,series,tail_exponent,margin\n";
      for (const auto& r : v.evidence)
        csv << r.id << "," << to_string(r.verdict) << "," << to_string(r.sufficiency) << "," << csv_number(r.witness) << ","
            << csv_number(r.growth) << "," << (r.series ? to_string(r.series->classification) : "") << ","
            << (r.series ? csv_number(r.series->tail_exponent) : "") << "," << (r.series ? csv_number(r.series->margin) : "")
            << "\n";
      out << "wrote " << write_artifact(cfg, slug(s.name) + "-analyze-p" + short_num(*cfg.p) + ".csv", csv.str()) << "\n";
    }
    return v.admissible == Admissible::Unknown ? 2 : 0;
  });
}

int cmd_threshold(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.p_min || !cfg.p_max) fail(ErrorCode::Precondition, "threshold needs --p-min and --p-max");
    const auto s = load(cfg);
    Analyzer a(s, analyzer_options(cfg));
    const auto scan = threshold_scan(a, *cfg.p_min, *cfg.p_max, cfg.resolution);
    if (wants(cfg, Format::Text)) {
      out << "system      " << s.name << "\n";
      out << "p*          " << std::fixed << std::setprecision(4) << scan.p_star << " +/- " << scan.resolution << "\n";
      out << "bracket     [" << scan.p_low << ", " << scan.p_high << "]  (" << to_string(scan.low_verdict) << " -> Yes)\n";
      out.unsetf(std::ios::floatfield);
      out << std::setprecision(6);
      if (s.known_threshold) out << "known       " << short_num(*s.known_threshold) << "\n";
      out << "\ntrace:\n";
      for (const auto& v : scan.trace) out << "  p = " << std::setw(10) << short_num(v.p) << "  " << to_string(v.admissible) << "\n";
    }
    // trace CSV is always written
    std::ostringstream csv;
    csv << "step,p,admissible,criterion,verdict,sufficiency,witness,growth\n";
    for (std::size_t i = 0; i < scan.trace.size(); ++i)
      for (const auto& r : scan.trace[i].evidence)
        csv << i << "," << csv_number(scan.trace[i].p) << "," << to_string(scan.trace[i].admissible) << "," << r.id << ","
            << to_string(r.verdict) << "," << to_string(r.sufficiency) << "," << csv_number(r.witness) << ","
            << csv_number(r.growth) << "\n";
    out << "wrote " << write_artifact(cfg, slug(s.name) + "-threshold.csv", csv.str()) << "\n";
    if (wants(cfg, Format::Svg)) {
      plot::Series verdicts{"verdict (1 Yes, 0 Unknown, -1 No)", {}, {}, true};
      plot::Series resolvent{"resolvent witness", {}, {}, true};
      for (const auto& v : scan.trace) {
        verdicts.x.push_back(v.p);
        verdicts.y.push_back(v.admissible == Admissible::Yes ? 1.0 : v.admissible == Admissible::No ? -1.0 : 0.0);
        if (const auto* r = v.find("resolvent")) {
          resolvent.x.push_back(v.p);
          resolvent.y.push_back(std::log10(std::max(r->witness, 1e-300)));
        }
      }
      resolvent.label = "log10 resolvent witness";
      const auto svg = plot::svg({"threshold scan: " + s.name, "p", "verdict / log10 witness", false, false}, {verdicts, resolvent});
      out << "wrote " << write_artifact(cfg, slug(s.name) + "-threshold.svg", svg) << "\n";
    }
    return 0;
  });
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.p) fail(ErrorCode::Precondition, "oracle needs --p");
    const auto s = load(cfg);
    OracleOptions opts;
    opts.k_max = std::min<std::int64_t>(cfg.k_max, 20'000);
    const auto prof = constant_growth_profile(s, *cfg.p, dyadic_times(cfg.t_max), opts);
    if (wants(cfg, Format::Text)) {
      out << "system          " << s.name << "\n";
      out << "p               " << short_num(*cfg.p) << "\n";
      out << "classification  " << to_string(prof.classification) << "\n";
      out << "terminal slope  " << short_num(prof.terminal_slope) << "  (plateau <= " << kPlateauSlope
          << ", growing >= " << kGrowingSlope << ")\n\n";
      for (std::size_t i = 0; i < prof.times.size(); ++i)
        out << "  t = " << std::setw(8) << short_num(prof.times[i]) << "  C = " << short_num(prof.constants[i]) << "\n";
    }
    std::ostringstream csv;
    csv << "t,constant\n";
    for (std::size_t i = 0; i < prof.times.size(); ++i) csv << csv_number(prof.times[i]) << "," << csv_number(prof.constants[i]) << "\n";
    const std::string base = slug(s.name) + "-oracle-p" + short_num(*cfg.p);
    if (wants(cfg, Format::Csv)) out << "wrote " << write_artifact(cfg, base + ".csv", csv.str()) << "\n";
    if (wants(cfg, Format::Svg)) {
      const auto svg = plot::svg({"admissibility constant estimate: " + s.name, "t", "C_est(t)", true, true},
                                 {{"p = " + short_num(*cfg.p), prof.times, prof.constants, false}});
      out << "wrote " << write_artifact(cfg, base + ".svg", svg) << "\n";
    }
    return 0;
  });
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto show = [&](const CatalogEntry& e) {
      out << e.name << "\n  " << e.summary << "\n";
      if (!e.parameter.empty()) out << "  parameter " << e.parameter << " (default " << short_num(e.default_parameter) << ")\n";
      for (const auto& [par, p] : e.thresholds) {
        out << "  p* = " << short_num(p);
        if (!e.parameter.empty()) out << "  (" << e.parameter << " = " << short_num(par) << ")";
        out << "\n";
      }
      out << "  " << e.note << "\n";
    };
    if (!cfg.catalog_name.empty()) {
      show(catalog_entry(cfg.catalog_name));
      return 0;
    }
    for (const auto& e : catalog_entries()) show(e);
    return 0;
  });
}

int cmd_embed(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.p) fail(ErrorCode::Precondition, "embed needs --p");
    auto s = load(cfg);
    Analyzer a(s, analyzer_options(cfg));
    const auto& mu = a.measure();
    const auto fam = exponential_family(cfg.rate_min, cfg.rate_max, cfg.per_decade);
    const auto b = embedding_lower_bound(mu, *cfg.p, a.system().q(), fam);
    if (wants(cfg, Format::Text)) {
      out << "system       " << a.system().name << "\n";
      out << "p, q         " << short_num(*cfg.p) << ", " << short_num(a.system().q()) << "\n";
      out << "lower bound  " << short_num(b.bound) << "\n";
      out << "trend        " << short_num(b.trend) << "  (slope of log ratio vs log rate, last decade; heuristic)\n";
    }
    std::ostringstream csv;
    csv << "rate,ratio\n";
    for (std::size_t i = 0; i < b.rates.size(); ++i) csv << csv_number(b.rates[i]) << "," << csv_number(b.ratios[i]) << "\n";
    const std::string base = slug(a.system().name) + "-embed-p" + short_num(*cfg.p);
    if (wants(cfg, Format::Csv)) out << "wrote " << write_artifact(cfg, base + ".csv", csv.str()) << "\n";
    if (wants(cfg, Format::Svg)) {
      const auto svg = plot::svg({"Laplace embedding ratio: " + a.system().name, "rate", "ratio", true, true},
                                 {{"exponential probes", b.rates, b.ratios, false}});
      out << "wrote " << write_artifact(cfg, base + ".svg", svg) << "\n";
    }
    return 0;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"L^p-admissibility of control operators for diagonal and normal semigroups", "lpadm"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<std::string> formats;
  double k_max = 1e6;
  std::string named_source;

  auto common = [&](CLI::App* sub) {
    sub->add_option("source", cfg.source, "catalog name or system file");
    sub->add_option("--system,--name", named_source, "catalog name or system file");
    sub->add_option("--param,--n", cfg.parameter, "catalog parameter (n for laplacian-Rn, p for the counterexamples)");
    sub->add_option("--k-max", k_max, "index horizon for infinite families")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out_dir, "output directory (default $LPADM_OUT_DIR, then .)");
    sub->add_option("--format", formats, "text, csv, svg")->delimiter(',')->check(CLI::IsMember({"text", "csv", "svg"}));
  };

  auto* analyze = app.add_subcommand("analyze", "fused verdict for one p");
  common(analyze);
  analyze->add_option("--p", cfg.p, "exponent p")->required();

  auto* threshold = app.add_subcommand("threshold", "bisection for the critical exponent");
  common(threshold);
  threshold->add_option("--p-min", cfg.p_min)->required();
  threshold->add_option("--p-max", cfg.p_max)->required();
  threshold->add_option("--resolution", cfg.resolution)->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "simulated admissibility constants over dyadic horizons");
  common(oracle);
  oracle->add_option("--p", cfg.p)->required();
  oracle->add_option("--t-max", cfg.t_max)->check(CLI::Range(1.0, 1e9));

  auto* catalog = app.add_subcommand("catalog", "list builtin systems");
  catalog->add_option("--name", cfg.catalog_name, "show one entry");

  auto* embed = app.add_subcommand("embed", "Laplace embedding sweep over exponential probes");
  common(embed);
  embed->add_option("--p", cfg.p)->required();
  embed->add_option("--rate-min", cfg.rate_min)->check(CLI::PositiveNumber);
  embed->add_option("--rate-max", cfg.rate_max)->check(CLI::PositiveNumber);
  embed->add_option("--per-decade", cfg.per_decade)->check(CLI::Range(1, 100));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'lpadm --help' for usage\n";
    return 1;
  }
  cfg.k_max = std::int64_t(k_max);
  if (!named_source.empty()) cfg.source = named_source;
  if (!formats.empty()) {
    cfg.formats.clear();
    for (const auto& f : formats) cfg.formats.insert(f == "text" ? Format::Text : f == "csv" ? Format::Csv : Format::Svg);
  }
  if (analyze->parsed()) {
    cfg.command = "analyze";
    return cmd_analyze(cfg, out, err);
  }
  if (threshold->parsed()) {
    cfg.command = "threshold";
    return cmd_threshold(cfg, out, err);
  }
  if (oracle->parsed()) {
    cfg.command = "oracle";
    return cmd_oracle(cfg, out, err);
  }
  if (embed->parsed()) {
    cfg.command = "embed";
    return cmd_embed(cfg, out, err);
  }
  cfg.command = "catalog";
  return cmd_catalog(cfg, out, err);
}

}  // namespace lpadm::cli
