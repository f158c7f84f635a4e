#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lpadm/model.hpp"

namespace lpadm {

// Throws ParseError naming the offending field.
SystemDescriptor system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const SystemDescriptor& s);

SystemDescriptor load_system_file(const std::string& path);

// a readable file path, otherwise a catalog name
SystemDescriptor resolve_system(const std::string& source, std::optional<double> parameter = std::nullopt);

}  // namespace lpadm
