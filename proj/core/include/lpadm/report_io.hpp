#pragma once

#include <nlohmann/json.hpp>

#include "lpadm/analyzer.hpp"
#include "lpadm/oracle.hpp"

namespace lpadm {

nlohmann::json to_json(const SeriesVerdict& v);
nlohmann::json to_json(const CriterionReport& r);
nlohmann::json to_json(const Contradiction& c);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const ThresholdScan& s);
nlohmann::json to_json(const ConstantProfile& p);

Verdict verdict_from_json(const nlohmann::json& j);

// Yes needs Sufficient/Equivalent admissible evidence, No needs Equivalent or
// Necessary non-admissible evidence; checked on the serialized form.
bool evidence_supports_verdict(const nlohmann::json& verdict);

}  // namespace lpadm
