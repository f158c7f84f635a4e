#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <string>

#include "lpadm/analyzer.hpp"
#include "lpadm/catalog.hpp"
#include "lpadm/errors.hpp"
#include "lpadm/report_io.hpp"
#include "lpadm/system_io.hpp"

using namespace lpadm;
using nlohmann::json;

namespace {
std::string data(const std::string& f) { return std::string(LPADM_DATA_DIR) + "/" + f; }

std::string parse_error(const json& j) {
  try {
    system_from_json(j);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    return e.what();
  }
  ADD_FAILURE() << "accepted " << j.dump();
  return {};
}
}  // namespace

TEST(SystemIo, Heat1dFileMatchesCatalog) {
  auto file = load_system_file(data("heat1d.json"));
  auto cat = catalog_system("heat1d-dirichlet");
  const auto& a = std::get<DiagonalSystem>(file.system);
  const auto& b = std::get<DiagonalSystem>(cat.system);
  for (int k : {1, 7, 100}) {
    EXPECT_NEAR(a.lambda(k).real(), b.lambda(k).real(), 1e-14 * std::abs(b.lambda(k).real()));
    EXPECT_NEAR(a.b(k).real(), b.b(k).real(), 1e-14 * std::abs(b.b(k).real()));
  }
  EXPECT_EQ(file.name, "heat1d from file");
}

TEST(SystemIo, OtherKinds) {
  auto m = load_system_file(data("multiplier.json"));
  ASSERT_TRUE(m.is_multiplier());
  EXPECT_EQ(std::get<MultiplierSystem>(m.system).atoms[3].symbol, cplx(-64.0, 10.0));
  auto n = load_system_file(data("neumann.json"));
  ASSERT_TRUE(n.is_power_law());
  EXPECT_EQ(std::get<PowerLawDensitySystem>(n.system).sigma, 1.0);
  auto o = load_system_file(data("damped-oscillators.json"));
  const auto& d = std::get<DiagonalSystem>(o.system);
  EXPECT_EQ(d.b(3), cplx(0.5, 0.5));
  EXPECT_FALSE(d.real_spectrum());
}

TEST(SystemIo, RoundTrip) {
  for (const char* f : {"heat1d.json", "multiplier.json", "neumann.json", "damped-oscillators.json", "squares.json"}) {
    auto s = load_system_file(data(f));
    auto back = system_from_json(system_to_json(s));
    EXPECT_EQ(system_to_json(back), system_to_json(s)) << f;
  }
}

TEST(SystemIo, ErrorsNameTheField) {
  try {
    load_system_file(data("bad-field.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("eigenvalues.c"), std::string::npos) << e.what();
  }
  EXPECT_NE(parse_error(json{{"kind", "torus"}}).find("kind"), std::string::npos);
  EXPECT_NE(parse_error(json{{"kind", "power-law"}}).find("gamma"), std::string::npos);
  EXPECT_NE(parse_error(json::parse(R"({"kind":"multiplier","atoms":[{"symbol":-1}]})")).find("atoms[0].coefficient"),
            std::string::npos);
  EXPECT_NE(parse_error(json::parse(R"({"kind":"diagonal","eigenvalues":{"family":"explicit","values":[-1,"x"]},
                                       "coefficients":{"family":"explicit","values":[1,1]}})"))
                .find("eigenvalues.values[1]"),
            std::string::npos);
}

TEST(SystemIo, ResolveOrder) {
  EXPECT_TRUE(resolve_system(data("neumann.json")).is_power_law());
  EXPECT_TRUE(resolve_system("heat1d-dirichlet").is_diagonal());
  EXPECT_EQ(std::get<PowerLawDensitySystem>(resolve_system("laplacian-Rn", 1.0).system).gamma, -0.5);
  try {
    resolve_system("no-such-thing");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFound);
  }
  EXPECT_THROW(load_system_file(data("missing.json")), Error);
}

TEST(ReportIo, VerdictRoundTrip) {
  Analyzer a(catalog_system("heat1d-dirichlet"));
  for (double p : {1.5, 4.0, 5.0}) {
    const auto v = a.analyze(p);
    const auto j = to_json(v);
    EXPECT_TRUE(evidence_supports_verdict(j)) << p;
    const auto back = verdict_from_json(j);
    EXPECT_EQ(back.admissible, v.admissible);
    EXPECT_EQ(back.evidence.size(), v.evidence.size());
    EXPECT_EQ(to_json(back)["evidence"], j["evidence"]);
  }
}

TEST(ReportIo, InfinitySerializes) {
  CriterionReport r;
  r.id = "x";
  r.witness = std::numeric_limits<double>::infinity();
  auto j = to_json(r);
  EXPECT_EQ(j["witness"], "inf");
  EXPECT_NO_THROW((void)j.dump());
}

TEST(ReportIo, UnsupportedVerdictDetected) {
  Analyzer a(catalog_system("heat1d-dirichlet"));
  auto j = to_json(a.analyze(4.0));
  j["admissible"] = "Yes";
  EXPECT_FALSE(evidence_supports_verdict(j));
  EXPECT_THROW(verdict_from_json(json{{"p", 2}}), Error);
}
