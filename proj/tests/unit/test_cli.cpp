#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "qutrit_cli/commands.hpp"
#include "qutrit_cli/report.hpp"

using namespace qutrit::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qutrit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qutrit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST(Report, SerializeIsSortedAndFullPrecision) {
  Json j = {{"b", 0.1}, {"a", 1}, {"c", {{"z", true}, {"y", std::numeric_limits<double>::infinity()}}}};
  const std::string s = serialize(j, -1);
  EXPECT_EQ(s, "{\"a\":1,\"b\":0.10000000000000001,\"c\":{\"y\":null,\"z\":true}}\n");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.33333333333333331");
}

TEST(Report, PassedRequiresEveryCheck) {
  ReportDocument d;
  EXPECT_TRUE(d.passed());
  d.add_check("ok", true);
  EXPECT_TRUE(d.passed());
  d.add_check("bad", false, 3, 0.5);
  EXPECT_FALSE(d.passed());
  EXPECT_EQ(d.to_json()["passed"], false);
}

TEST_F(CliTest, BasisSucceeds) {
  const Result r = invoke({"basis"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST_F(CliTest, JsonOutputIsDeterministic) {
  for (const char* sub : {"classify", "verify"}) {
    std::vector<std::string> args = {"--seed", "17", "--samples", "500", "--json", path("a.json")};
    if (std::string(sub) == "classify") {
      args.insert(args.end(), {"classify", "2"});
    } else {
      args.insert(args.end(), {"verify", "statespace"});
    }
    ASSERT_EQ(invoke(args).code, kOk) << sub;
    args[5] = path("b.json");
    ASSERT_EQ(invoke(args).code, kOk) << sub;
    const std::string a = slurp(path("a.json")), b = slurp(path("b.json"));
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, b) << sub;
    const Json j = Json::parse(a);
    EXPECT_EQ(j["seed"], 17);
    EXPECT_EQ(j["passed"], true);
  }
}

TEST_F(CliTest, SeedChangesSampledResults) {
  ASSERT_EQ(invoke({"--seed", "1", "--samples", "300", "--json", path("a.json"), "verify", "statespace"}).code, kOk);
  ASSERT_EQ(invoke({"--seed", "2", "--samples", "300", "--json", path("b.json"), "verify", "statespace"}).code, kOk);
  EXPECT_NE(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(CliTest, ClassifyReportsTables) {
  const Result r = invoke({"--json", path("c.json"), "--csv", path("c.csv"), "classify", "2"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("Triangle (3): 18 28 38"), std::string::npos);
  EXPECT_FALSE(slurp(path("c.csv")).empty());
}

TEST_F(CliTest, MeshFormats) {
  ASSERT_EQ(invoke({"mesh", "146", "-r", "4", "-f", "obj", "-o", path("m.obj")}).code, kOk);
  const std::string obj = slurp(path("m.obj"));
  std::istringstream in(obj);
  int v = 0, f = 0;
  for (std::string line; std::getline(in, line);) {
    v += line.rfind("v ", 0) == 0;
    f += line.rfind("f ", 0) == 0;
  }
  EXPECT_EQ(v, 2 + 3 * 8);
  EXPECT_EQ(f, 4 * 4 * 3);

  ASSERT_EQ(invoke({"mesh", "146", "-r", "4", "-o", path("m.json")}).code, kOk);
  const Json j = Json::parse(slurp(path("m.json")));
  EXPECT_EQ(j["vertices"].size(), 26u);
  EXPECT_EQ(j["faces"].size(), 48u);
  EXPECT_EQ(j["resolution"], 4);

  ASSERT_EQ(invoke({"mesh", "146", "-r", "4", "-f", "csv", "-o", path("m.csv")}).code, kOk);
  const std::string csv = slurp(path("m.csv"));
  EXPECT_EQ(csv.rfind("x,y,z\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 27);
}

TEST_F(CliTest, BoundaryCommand) {
  const Result pure = invoke({"boundary", "0", "0", "0", "0", "0", "0", "0", "-1"});
  EXPECT_EQ(pure.code, kOk);
  EXPECT_NE(pure.out.find("boundary radius r = 1\n"), std::string::npos);
  EXPECT_EQ(invoke({"boundary", "3", "0", "0", "0", "0", "0", "0", "0"}).code, kOk);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"classify", "4"}).code, kUsage);
  EXPECT_EQ(invoke({"boundary", "0", "0", "0", "0", "0", "0", "0", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"boundary", "1", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"--samples", "0", "verify", "statespace"}).code, kUsage);
  EXPECT_EQ(invoke({"--tolerance", "-1", "basis"}).code, kUsage);
  EXPECT_EQ(invoke({"mesh", "146", "-f", "xyz", "-o", path("x")}).code, kUsage);
  EXPECT_EQ(invoke({"mesh", "14", "-o", path("x")}).code, kUsage);
  EXPECT_EQ(invoke({"mesh", "199", "-o", path("x")}).code, kUsage);
  EXPECT_EQ(invoke({"mesh", "146", "-r", "1", "-o", path("x")}).code, kUsage);
  EXPECT_EQ(invoke({"mesh", "146"}).code, kUsage);
}

TEST_F(CliTest, HelpExitsCleanly) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("classify"), std::string::npos);
}

TEST_F(CliTest, IoErrors) {
  EXPECT_EQ(invoke({"mesh", "146", "-o", path("missing/dir/m.json")}).code, kIo);
  EXPECT_EQ(invoke({"--json", path("missing/dir/r.json"), "basis"}).code, kIo);
}
