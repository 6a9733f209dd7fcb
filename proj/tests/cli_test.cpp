#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "walkmap/cli.hpp"

namespace fs = std::filesystem;
using walkmap::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(WALKMAP_TEST_DATA) + "/" + name; }

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

std::vector<GoldenCase> load_cases() {
  std::ifstream in(std::string(WALKMAP_GOLDEN_DIR) + "/cases.txt");
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    GoldenCase c{line.substr(0, colon), {"--no-timing"}};
    std::istringstream words(line.substr(colon + 1));
    for (std::string w; words >> w;) c.args.push_back(w.ends_with(".json") ? data_file(w) : w);
    cases.push_back(std::move(c));
  }
  return cases;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliGolden, MatchesCommittedReports) {
  auto cases = load_cases();
  ASSERT_GT(cases.size(), 30u);
  const bool update = std::getenv("WALKMAP_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : cases) {
    fs::path golden = fs::path(WALKMAP_GOLDEN_DIR) / (c.name + ".json");
    auto r = invoke(c.args);
    auto report = nlohmann::json::parse(r.out);
    EXPECT_EQ(report["exit_code"], r.code) << c.name;
    EXPECT_FALSE(report.contains("wall_time_ms")) << c.name;
    if (update) {
      std::ofstream(golden) << r.out;
      continue;
    }
    ASSERT_TRUE(fs::exists(golden)) << golden;
    EXPECT_EQ(r.out, read_file(golden)) << c.name;
    EXPECT_EQ(invoke(c.args).out, r.out) << c.name << " is not deterministic";
  }
}

TEST(Cli, FacesDigon) {
  auto r = invoke({"faces", data_file("digon.json")});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "faces");
  EXPECT_EQ(j["result"]["face_count"], 2);
  EXPECT_EQ(j["result"]["euler_characteristic"], 2);
  EXPECT_TRUE(j["wall_time_ms"].is_number());
}

TEST(Cli, NormalizePathloop) {
  auto r = invoke({"normalize", data_file("pathloop.json"), "--walk", "0:e0+,e1+,e2+"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["normal_form"], "0:e2+");
  EXPECT_EQ(j["result"]["trace"][0]["rule"], "xi3");
}

TEST(Cli, EulerTorusIsNegative) {
  auto r = invoke({"check-spherical", data_file("torus2.json"), "--method", "euler"});
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["status"], "not_spherical");
  EXPECT_EQ(j["result"]["euler_characteristic"], 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"validate", data_file("digon.json")}).code, 0);
  EXPECT_EQ(invoke({"validate", data_file("malformed.json")}).code, 2);
  EXPECT_EQ(invoke({"validate", data_file("bad_endpoint.json")}).code, 3);
  EXPECT_EQ(invoke({"faces", data_file("triangle_graph.json")}).code, 3);
  EXPECT_EQ(invoke({"validate", data_file("digon_foreign_dart.json")}).code, 4);
  EXPECT_EQ(invoke({"normalize", data_file("digon.json"), "--walk", "0:e0"}).code, 5);
  EXPECT_EQ(invoke({"validate", data_file("does_not_exist.json")}).code, 6);
  EXPECT_EQ(invoke({"homotopic", data_file("torus2.json"), "--w1", "0:e0+", "--w2", "0:e1+"}).code, 1);
  EXPECT_EQ(invoke({"check-spherical", data_file("digon.json"), "--method", "nope"}).code, 64);
}

TEST(Cli, UsageErrors) {
  auto unknown = invoke({"frobnicate"});
  EXPECT_EQ(unknown.code, 64);
  EXPECT_TRUE(unknown.out.empty());
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(invoke({}).code, 64);
  EXPECT_EQ(invoke({"validate"}).code, 64);
  EXPECT_EQ(invoke({"--seed", "4", "validate", data_file("digon.json")}).code, 64);
  EXPECT_EQ(invoke({"validate", data_file("digon.json"), "--seed", "4"}).code, 64);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, PrettyKeepsExitCodeAndPayload) {
  for (const auto* file : {"digon.json", "torus2.json"}) {
    auto plain = invoke({"--no-timing", "check-spherical", data_file(file), "--method", "euler"});
    auto pretty = invoke({"--no-timing", "--pretty", "check-spherical", data_file(file), "--method", "euler"});
    EXPECT_EQ(plain.code, pretty.code);
    EXPECT_NE(plain.out, pretty.out);
    EXPECT_EQ(nlohmann::json::parse(plain.out), nlohmann::json::parse(pretty.out));
  }
}

TEST(Cli, CertificatesFile) {
  fs::path out = fs::temp_directory_path() / "walkmap_cli_test_certs.json";
  fs::remove(out);
  auto r = invoke({"homotopic", data_file("digon.json"), "--w1", "0:e0+", "--w2", "0:e1+", "--certificates", out.string()});
  ASSERT_EQ(r.code, 0);
  auto certs = nlohmann::json::parse(read_file(out));
  ASSERT_EQ(certs.size(), 1u);
  EXPECT_EQ(certs[0]["source"], "0:e0+");
  EXPECT_EQ(certs[0]["target"], "0:e1+");
  EXPECT_EQ(certs[0]["moves"].size(), 1u);
  fs::remove(out);
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("WALKMAP_MAX_LEN", "3", 1);
  auto r = invoke({"homotopic", data_file("torus2.json"), "--w1", "0:e0+", "--w2", "0:e1+"});
  ::unsetenv("WALKMAP_MAX_LEN");
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["max_len"], 3);
  auto flag = invoke({"homotopic", data_file("torus2.json"), "--w1", "0:e0+", "--w2", "0:e1+", "--max-len", "2"});
  EXPECT_EQ(nlohmann::json::parse(flag.out)["result"]["max_len"], 2);
}
