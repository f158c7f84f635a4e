#include "lpadm/report_io.hpp"

#include <cmath>
#include <limits>

#include "lpadm/errors.hpp"

namespace lpadm {

namespace {

using nlohmann::json;

// JSON has no infinity
json jnum(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double num_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::numeric_limits<double>::quiet_NaN();
}

template <class E>
E enum_from(const std::string& s, std::initializer_list<E> all) {
  for (E e : all)
    if (to_string(e) == s) return e;
  fail(ErrorCode::ParseError, "unknown enum value '" + s + "'");
}

}  // namespace

json to_json(const SeriesVerdict& v) {
  return {{"classification", to_string(v.classification)}, {"partial_value", jnum(v.partial_value)},
          {"tail_exponent", jnum(v.tail_exponent)}, {"margin", jnum(v.margin)}, {"boundary", v.boundary},
          {"mode", to_string(v.mode)}, {"rule", v.rule}};
}

json to_json(const CriterionReport& r) {
  json j = {{"id", r.id}, {"verdict", to_string(r.verdict)}, {"witness", jnum(r.witness)}, {"growth", jnum(r.growth)},
            {"sufficiency", to_string(r.sufficiency)}, {"notes", r.notes}};
  if (r.series) j["series"] = to_json(*r.series);
  return j;
}

json to_json(const Contradiction& c) {
  return {{"rule", c.rule}, {"first", c.first}, {"second", c.second}, {"p", c.p}, {"detail", c.detail}};
}

json to_json(const Verdict& v) {
  json ev = json::array(), co = json::array();
  for (const auto& r : v.evidence) ev.push_back(to_json(r));
  for (const auto& c : v.contradictions) co.push_back(to_json(c));
  return {{"p", v.p}, {"admissible", to_string(v.admissible)}, {"time_scope", to_string(v.time_scope)},
          {"applied_shift", v.applied_shift}, {"evidence", ev}, {"contradictions", co}, {"advisories", v.advisories}};
}

json to_json(const ThresholdScan& s) {
  json tr = json::array();
  for (const auto& v : s.trace) tr.push_back({{"p", v.p}, {"admissible", to_string(v.admissible)}});
  return {{"p_low", s.p_low}, {"p_high", s.p_high}, {"p_star", s.p_star}, {"resolution", s.resolution},
          {"low_verdict", to_string(s.low_verdict)}, {"trace", tr}};
}

json to_json(const ConstantProfile& p) {
  return {{"times", p.times}, {"constants", p.constants}, {"classification", to_string(p.classification)},
          {"terminal_slope", p.terminal_slope}, {"certified", p.certified}};
}

Verdict verdict_from_json(const json& j) {
  try {
    Verdict v;
    v.p = j.at("p").get<double>();
    v.admissible = enum_from(j.at("admissible").get<std::string>(), {Admissible::Yes, Admissible::No, Admissible::Unknown});
    v.time_scope = enum_from(j.at("time_scope").get<std::string>(), {TimeScope::FiniteTime, TimeScope::InfiniteTime});
    v.applied_shift = j.value("applied_shift", 0.0);
    for (const auto& e : j.at("evidence")) {
      CriterionReport r;
      r.id = e.at("id").get<std::string>();
      r.verdict = enum_from(e.at("verdict").get<std::string>(),
                            {Evidence::AdmissibleEvidence, Evidence::NotAdmissibleEvidence, Evidence::Inconclusive});
      r.sufficiency = enum_from(e.at("sufficiency").get<std::string>(),
                                {Sufficiency::Sufficient, Sufficiency::Necessary, Sufficiency::Equivalent});
      r.witness = num_from(e.at("witness"));
      r.growth = num_from(e.at("growth"));
      r.notes = e.value("notes", std::vector<std::string>{});
      if (e.contains("series")) {
        const auto& s = e.at("series");
        SeriesVerdict sv;
        sv.classification = enum_from(s.at("classification").get<std::string>(),
                                      {Convergence::Convergent, Convergence::Divergent, Convergence::Inconclusive});
        sv.partial_value = num_from(s.at("partial_value"));
        sv.tail_exponent = num_from(s.at("tail_exponent"));
        sv.margin = num_from(s.at("margin"));
        sv.boundary = s.at("boundary").get<double>();
        sv.mode = enum_from(s.at("mode").get<std::string>(), {TermMode::Power, TermMode::Geometric});
        sv.rule = s.value("rule", "");
        r.series = sv;
      }
      v.evidence.push_back(r);
    }
    for (const auto& c : j.at("contradictions"))
      v.contradictions.push_back({c.at("rule"), c.at("first"), c.at("second"), c.at("p"), c.at("detail")});
    v.advisories = j.value("advisories", std::vector<std::string>{});
    return v;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("verdict: ") + e.what());
  }
}

bool evidence_supports_verdict(const json& j) {
  const auto verdict = j.at("admissible").get<std::string>();
  bool yes = false, no = false;
  for (const auto& e : j.at("evidence")) {
    const auto v = e.at("verdict").get<std::string>();
    const auto s = e.at("sufficiency").get<std::string>();
    if (v == "AdmissibleEvidence" && (s == "Sufficient" || s == "Equivalent")) yes = true;
    if (v == "NotAdmissibleEvidence" && (s == "Equivalent" || s == "Necessary")) no = true;
  }
  if (verdict == "Yes") return yes && !no;
  if (verdict == "No") return no && !yes;
  return true;
}

}  // namespace lpadm
