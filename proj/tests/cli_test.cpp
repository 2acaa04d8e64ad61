#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hstar/cli.hpp"

using hstar::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hstar::cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_args(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> v;
  for (std::string w; is >> w;) v.push_back(w);
  return v;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  const auto b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<long long> ints(const Json& a) {
  std::vector<long long> v;
  for (const auto& x : a) v.push_back(x.get<long long>());
  return v;
}

using L = std::vector<long long>;

}  // namespace

TEST(Golden, ReplaysCorpus) {
  std::ifstream manifest(std::string(HSTAR_GOLDEN_DIR) + "/manifest.txt");
  ASSERT_TRUE(manifest) << "missing manifest";
  int cases = 0;
  for (std::string line; std::getline(manifest, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    ASSERT_NE(bar, std::string::npos) << line;
    const std::string file = trim(line.substr(0, bar));
    std::ifstream in(std::string(HSTAR_GOLDEN_DIR) + "/" + file);
    ASSERT_TRUE(in) << file;
    std::stringstream expected;
    expected << in.rdbuf();
    auto r = run(split_args(line.substr(bar + 1)));
    EXPECT_EQ(r.code, 0) << file << ": " << r.err;
    EXPECT_EQ(r.out, expected.str()) << file;
    ++cases;
  }
  EXPECT_GE(cases, 8);
}

TEST(Cli, LocalHstarExamples) {
  auto j = Json::parse(run({"local-hstar", "--q", "2,3"}).out);
  EXPECT_EQ(ints(j["local_hstar"]), (L{0, 1, 1}));
  j = Json::parse(run({"local-hstar", "--q", "1,1"}).out);
  EXPECT_EQ(ints(j["local_hstar"]), (L{0, 1, 1}));
  EXPECT_EQ(j["properties"]["t_set_size"], 2);
  auto r = run({"local-hstar", "--q", "3,8,12", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = Json::parse(r.out);
  EXPECT_EQ(ints(j["local_hstar"]), (L{0, 1, 6, 1}));
  EXPECT_EQ(j["provenance"]["oracle_checked"], true);
  EXPECT_EQ(ints(j["properties"]["gamma"]), (L{0, 1, 4}));
}

TEST(Cli, ReportHasExactlyTheSchemaKeys) {
  auto j = Json::parse(run({"hstar", "--q", "2,6"}).out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"q", "Q", "hstar", "local_hstar", "properties", "provenance"}));
  EXPECT_EQ(ints(j["hstar"]), (L{1, 5, 3}));
  EXPECT_TRUE(j["properties"]["symmetric_center"].is_null());
  EXPECT_TRUE(j["provenance"]["runtime_ms"].is_null());
}

TEST(Cli, TimingFillsRuntime) {
  auto j = Json::parse(run({"hstar", "--q", "2,3", "--timing"}).out);
  EXPECT_TRUE(j["provenance"]["runtime_ms"].is_number());
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"family", "factoradic", "--n", "6", "--compare"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, LargeIntegersAreStrings) {
  auto j = Json::parse(run({"family", "factoradic", "--n", "20"}).out);
  EXPECT_TRUE(j["Q"].is_string());
  EXPECT_EQ(j["Q"].get<std::string>(), "51090942171709440000");
  EXPECT_TRUE(j["q"][0].is_number());
  EXPECT_EQ(j["properties"]["t_set_size"].get<std::string>(), "17030314057236480000");
}

TEST(Cli, FamilyCompare) {
  auto r = run({"family", "factoradic", "--n", "3", "--compare"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ints(Json::parse(r.out)["local_hstar"]), (L{0, 1, 6, 1}));
  for (const char* m : {"enum", "recursion", "formula"}) {
    auto s = run({"family", "factoradic", "--n", "3", "--method", m});
    EXPECT_EQ(ints(Json::parse(s.out)["local_hstar"]), (L{0, 1, 6, 1})) << m;
    EXPECT_EQ(Json::parse(s.out)["provenance"]["method"], m);
  }
  r = run({"family", "base-r", "--r", "3", "--n", "4", "--compare", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  r = run({"family", "projective", "--n", "6", "--compare"});
  ASSERT_EQ(r.code, 0) << r.err;
}

TEST(Cli, Props) {
  auto j = Json::parse(run({"props", "--poly", "0,1,6,1", "--center", "4"}).out);
  EXPECT_EQ(j["properties"]["symmetric_center"], 4);
  EXPECT_EQ(j["properties"]["real_rooted"], true);
  EXPECT_EQ(ints(j["properties"]["gamma"]), (L{0, 1, 4}));
  j = Json::parse(run({"props", "--poly", "1,1,1"}).out);
  EXPECT_EQ(j["properties"]["real_rooted"], false);
  EXPECT_EQ(j["properties"]["symmetric_center"], 2);
  // z(1+z)^4 is symmetric about 6, not 5.
  j = Json::parse(run({"props", "--poly", "0,1,4,6,4,1", "--center", "6"}).out);
  EXPECT_EQ(ints(j["properties"]["gamma"]), (L{0, 1, 0, 0}));
  auto r = run({"props", "--poly", "0,1,4,6,4,1", "--center", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["properties"]["symmetric_center"].is_null());
  EXPECT_NE(r.err.find("not symmetric about 5"), std::string::npos);
  j = Json::parse(run({"props", "--poly", "1,-3,1"}).out);
  EXPECT_TRUE(j["properties"]["unimodal"].is_null());
}

TEST(Cli, Triangle) {
  EXPECT_EQ(run({"triangle", "--rows", "0", "--format", "csv"}).out, "");
  auto j = Json::parse(run({"triangle", "--rows", "0"}).out);
  EXPECT_TRUE(j["rows"].empty());
  auto r = run({"triangle", "--explain-indexing"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(n+1)!"), std::string::npos);
  j = Json::parse(run({"triangle", "--rows", "25"}).out);
  EXPECT_EQ(j["rows"].size(), 25u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"hstar", "--q", "2,x"}).code, 2);
  EXPECT_EQ(run({"hstar", "--q", "2,0"}).code, 2);
  EXPECT_EQ(run({"hstar", "--q", ""}).code, 2);
  EXPECT_EQ(run({"hstar"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"props", "--poly", "1,,2"}).code, 2);
  EXPECT_EQ(run({"family", "base-r", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"family", "projective", "--n", "3", "--method", "recursion"}).code, 2);
  EXPECT_EQ(run({"hstar", "--q", "2,3", "--format", "xml"}).code, 2);
}

TEST(Cli, ScaleGuardExitsThree) {
  auto r = run({"hstar", "--q", "50,60", "--max-volume", "100"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("max-volume"), std::string::npos);
  r = run({"local-hstar", "--q", "30,40", "--oracle", "--max-box", "1000"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("max-box"), std::string::npos);
  EXPECT_EQ(run({"family", "factoradic", "--n", "10", "--method", "enum"}).code, 3);
  EXPECT_EQ(run({"family", "factoradic", "--n", "12", "--compare"}).code, 3);
}

TEST(Cli, VerifySubset) {
  auto r = run({"verify", "--only", "7", "--only", "9"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS   7"), std::string::npos);
  EXPECT_NE(r.out.find("PASS   9"), std::string::npos);
  EXPECT_EQ(r.out.find("  1  "), std::string::npos);
}
