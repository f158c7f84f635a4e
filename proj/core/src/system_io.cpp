#include "lpadm/system_io.hpp"

#include <filesystem>
#include <fstream>

#include "lpadm/catalog.hpp"
#include "lpadm/errors.hpp"

namespace lpadm {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  fail(ErrorCode::ParseError, "field '" + field + "': " + what);
}

const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) bad(path + key, "missing");
  return j.at(key);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) bad(field, "expected a number");
  return j.get<double>();
}

double number_or(const json& j, const std::string& key, double fallback, const std::string& path) {
  if (!j.contains(key)) return fallback;
  return number(j.at(key), path + key);
}

cplx complex_value(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object() && j.contains("re")) return {number(j.at("re"), field + ".re"), number_or(j, "im", 0.0, field + ".")};
  bad(field, "expected a number, [re, im] or {re, im}");
}

json complex_json(cplx v) {
  if (v.imag() == 0.0) return v.real();
  return json::array({v.real(), v.imag()});
}

IndexFamily family_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) bad(field, "expected an object");
  const auto& fam = need(j, "family", field + ".");
  if (!fam.is_string()) bad(field + ".family", "expected a string");
  const auto kind = fam.get<std::string>();
  const std::string pre = field + ".";
  bool alternate = false;
  if (j.contains("alternate")) {
    if (!j.at("alternate").is_boolean()) bad(pre + "alternate", "expected true or false");
    alternate = j.at("alternate").get<bool>();
  }
  if (kind == "explicit") {
    const auto& vals = need(j, "values", pre);
    if (!vals.is_array() || vals.empty()) bad(pre + "values", "expected a nonempty array");
    std::vector<cplx> out;
    for (std::size_t i = 0; i < vals.size(); ++i) out.push_back(complex_value(vals[i], pre + "values[" + std::to_string(i) + "]"));
    return IndexFamily::explicit_values(std::move(out));
  }
  if (kind == "power")
    return IndexFamily::power(number(need(j, "c", pre), pre + "c"), number(need(j, "r", pre), pre + "r"), alternate);
  if (kind == "geometric")
    return IndexFamily::geometric(number(need(j, "c", pre), pre + "c"), number(need(j, "rho", pre), pre + "rho"),
                                  number_or(j, "r", 0.0, pre), alternate);
  bad(pre + "family", "unknown family '" + kind + "' (explicit, power, geometric)");
}

json family_to_json(const IndexFamily& f) {
  json j;
  switch (f.kind()) {
    case FamilyKind::Explicit: {
      j["family"] = "explicit";
      json vals = json::array();
      for (const auto& v : f.values()) vals.push_back(complex_json(v));
      j["values"] = vals;
      return j;
    }
    case FamilyKind::Power:
      j["family"] = "power";
      j["c"] = f.c();
      j["r"] = f.r();
      break;
    case FamilyKind::Geometric:
      j["family"] = "geometric";
      j["c"] = f.c();
      j["rho"] = f.rho();
      if (f.r() != 0.0) j["r"] = f.r();
      break;
  }
  if (f.alternate()) j["alternate"] = true;
  return j;
}

}  // namespace

SystemDescriptor system_from_json(const json& j) {
  if (!j.is_object()) bad("<root>", "expected an object");
  const auto& kind_j = need(j, "kind", "");
  if (!kind_j.is_string()) bad("kind", "expected a string");
  const auto kind = kind_j.get<std::string>();
  SystemDescriptor d;
  if (kind == "diagonal") {
    DiagonalSystem s;
    s.eigenvalues = family_from_json(need(j, "eigenvalues", ""), "eigenvalues");
    s.coefficients = family_from_json(need(j, "coefficients", ""), "coefficients");
    s.q = number_or(j, "q", 2.0, "");
    if (j.contains("sector_angle")) s.sector_angle = number(j.at("sector_angle"), "sector_angle");
    if (j.contains("offset")) {
      const auto& o = j.at("offset");
      if (!o.is_number_integer()) bad("offset", "expected an integer");
      s.first_index = o.get<std::int64_t>();
    }
    d.system = s;
  } else if (kind == "power-law") {
    PowerLawDensitySystem s;
    s.gamma = number(need(j, "gamma", ""), "gamma");
    s.sigma = number_or(j, "sigma", 0.0, "");
    s.scale = number_or(j, "scale", 1.0, "");
    s.q = number_or(j, "q", 2.0, "");
    d.system = s;
  } else if (kind == "multiplier") {
    MultiplierSystem s;
    s.q = number_or(j, "q", 2.0, "");
    const auto& atoms = need(j, "atoms", "");
    if (!atoms.is_array()) bad("atoms", "expected an array");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const std::string pre = "atoms[" + std::to_string(i) + "].";
      MultiplierAtom a;
      a.weight = number_or(atoms[i], "weight", 1.0, pre);
      a.symbol = complex_value(need(atoms[i], "symbol", pre), pre + "symbol");
      a.coefficient = complex_value(need(atoms[i], "coefficient", pre), pre + "coefficient");
      s.atoms.push_back(a);
    }
    d.system = s;
  } else {
    bad("kind", "unknown kind '" + kind + "' (diagonal, power-law, multiplier)");
  }
  if (j.contains("name")) {
    if (!j.at("name").is_string()) bad("name", "expected a string");
    d.name = j.at("name").get<std::string>();
  }
  if (j.contains("note") && j.at("note").is_string()) d.note = j.at("note").get<std::string>();
  validate(d);
  return d;
}

json system_to_json(const SystemDescriptor& d) {
  json j;
  if (!d.name.empty()) j["name"] = d.name;
  if (!d.note.empty()) j["note"] = d.note;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DiagonalSystem>) {
          j["kind"] = "diagonal";
          j["eigenvalues"] = family_to_json(s.eigenvalues);
          j["coefficients"] = family_to_json(s.coefficients);
          j["q"] = s.q;
          j["offset"] = s.first_index;
          if (s.sector_angle) j["sector_angle"] = *s.sector_angle;
        } else if constexpr (std::is_same_v<T, PowerLawDensitySystem>) {
          j["kind"] = "power-law";
          j["gamma"] = s.gamma;
          j["sigma"] = s.sigma;
          j["scale"] = s.scale;
          j["q"] = s.q;
        } else {
          j["kind"] = "multiplier";
          j["q"] = s.q;
          json atoms = json::array();
          for (const auto& a : s.atoms)
            atoms.push_back({{"weight", a.weight}, {"symbol", complex_json(a.symbol)}, {"coefficient", complex_json(a.coefficient)}});
          j["atoms"] = atoms;
        }
      },
      d.system);
  return j;
}

SystemDescriptor load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::NotFound, "cannot read system file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
  auto d = system_from_json(j);
  if (d.name.empty()) d.name = std::filesystem::path(path).stem().string();
  return d;
}

SystemDescriptor resolve_system(const std::string& source, std::optional<double> parameter) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    if (parameter) fail(ErrorCode::InvalidSystem, "parameters apply to catalog entries only");
    return load_system_file(source);
  }
  if (in_catalog(source)) return catalog_system(source, parameter);
  fail(ErrorCode::NotFound, "'" + source + "' is neither a readable file nor a catalog entry");
}

}  // namespace lpadm
