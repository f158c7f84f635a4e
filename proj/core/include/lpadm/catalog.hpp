#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpadm/model.hpp"

namespace lpadm {

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::string parameter;  // empty when the entry takes none
  double default_parameter = 0.0;
  // known thresholds, one per listed parameter value (or a single one)
  std::vector<std::pair<double, double>> thresholds;  // (parameter, p*)
  std::string note;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);  // NotFound
bool in_catalog(const std::string& name);

SystemDescriptor catalog_system(const std::string& name, std::optional<double> parameter = std::nullopt);

}  // namespace lpadm
