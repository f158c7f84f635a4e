#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run lpadm_run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpadm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lpadm::cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("lpadm-cli-" + name);
  fs::remove_all(dir);
  return dir;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }
}  // namespace

TEST(Cli, AnalyzeExitCodes) {
  auto yes = lpadm_run({"analyze", "heat1d-dirichlet", "--p", "5"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_TRUE(contains(yes.out, "verdict     Yes"));
  auto no = lpadm_run({"analyze", "heat1d-dirichlet", "--p", "4"});
  EXPECT_EQ(no.code, 0);
  EXPECT_TRUE(contains(no.out, "verdict     No"));
  EXPECT_EQ(lpadm_run({"analyze", "heat1d-dirichlet", "--p", "1"}).code, 1);
  EXPECT_EQ(lpadm_run({"analyze", "heat1d-dirichlet"}).code, 1);
  EXPECT_EQ(lpadm_run({"analyze", "--system", "heat1d-dirichlet", "--p", "5"}).code, 0);
}

TEST(Cli, UnknownVerdictExitsTwo) {
  // shifted n = 3 density just below its threshold: only the sufficient direction applies
  EXPECT_EQ(lpadm_run({"analyze", "laplacian-Rn", "--n", "3", "--p", "3.9"}).code, 2);
}

TEST(Cli, ParseErrorNamesField) {
  auto r = lpadm_run({"analyze", std::string(LPADM_DATA_DIR) + "/bad-field.json", "--p", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "eigenvalues.c")) << r.err;
}

TEST(Cli, ThresholdWritesDeterministicCsv) {
  auto a = scratch("a"), b = scratch("b");
  auto ra = lpadm_run({"threshold", "laplacian-Rn", "--n", "1", "--p-min", "1.05", "--p-max", "3", "--out", a.string(),
                       "--format", "text,svg"});
  auto rb = lpadm_run({"threshold", "laplacian-Rn", "--n", "1", "--p-min", "1.05", "--p-max", "3", "--out", b.string()});
  ASSERT_EQ(ra.code, 0) << ra.err;
  ASSERT_EQ(rb.code, 0) << rb.err;
  const auto csv = "laplacian-Rn-n-1-threshold.csv";
  ASSERT_TRUE(fs::exists(a / csv));
  EXPECT_EQ(slurp(a / csv), slurp(b / csv));
  EXPECT_TRUE(slurp(a / csv).starts_with("step,p,admissible,criterion,verdict,sufficiency,witness,growth\n"));
  EXPECT_TRUE(fs::exists(a / "laplacian-Rn-n-1-threshold.svg"));
  EXPECT_FALSE(fs::exists(b / "laplacian-Rn-n-1-threshold.svg"));
}

TEST(Cli, ThresholdNoBracket) {
  auto dir = scratch("nb");
  auto r = lpadm_run({"threshold", "heat1d-dirichlet", "--p-min", "5", "--p-max", "8", "--out", dir.string()});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, OutDirFromEnvironment) {
  auto dir = scratch("env");
  ::setenv("LPADM_OUT_DIR", dir.string().c_str(), 1);
  auto r = lpadm_run({"analyze", "heat1d-dirichlet", "--p", "5", "--format", "csv"});
  ::unsetenv("LPADM_OUT_DIR");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(dir / "heat1d-dirichlet-analyze-p5.csv"));
}

TEST(Cli, OracleDegenerateGrid) {
  auto r = lpadm_run({"oracle", "heat1d-dirichlet", "--p", "5", "--t-max", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "Inconclusive"));
}

TEST(Cli, Catalog) {
  auto all = lpadm_run({"catalog"});
  EXPECT_EQ(all.code, 0);
  for (const char* name : {"heat1d-dirichlet", "laplacian-Rn", "heat-halfline-neumann"})
    EXPECT_TRUE(contains(all.out, name)) << name;
  auto w = lpadm_run({"catalog", "--name", "weiss-counterexample"});
  EXPECT_EQ(w.code, 0);
  EXPECT_TRUE(contains(w.out, "4-Weiss property is violated"));
  EXPECT_EQ(lpadm_run({"catalog", "--name", "nonsense"}).code, 1);
}

TEST(Cli, EmbedCsv) {
  auto dir = scratch("embed");
  auto r = lpadm_run({"embed", "heat1d-dirichlet", "--p", "3", "--format", "csv", "--out", dir.string()});
  EXPECT_EQ(r.code, 0);
  const auto csv = slurp(dir / "heat1d-dirichlet-embed-p3.csv");
  EXPECT_TRUE(csv.starts_with("rate,ratio\n"));
}

TEST(Cli, NoCommand) {
  EXPECT_EQ(lpadm_run({}).code, 1);
  EXPECT_EQ(lpadm_run({"--help"}).code, 0);
}

TEST(Cli, CsvNumbers) {
  EXPECT_EQ(lpadm::cli::csv_number(0.1), "0.10000000000000001");
  EXPECT_EQ(lpadm::cli::csv_number(4.0), "4");
}
