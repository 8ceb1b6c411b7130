#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "lpalg/mutation.hpp"
#include "test_util.hpp"

namespace lpalg {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  Result r = run(args);
  return nlohmann::json::parse(r.out);
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("lpalg_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(Cli, MutatePrintsExampleSeed) {
  Result r = run({"mutate", "--seed", "ex2_6", "-k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a': b + 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("b: a'*c^2 + 1"), std::string::npos);
  EXPECT_NE(r.out.find("a': (b + 1)/(a*c)"), std::string::npos);
  EXPECT_EQ(run({"mutate", "--seed", "ex2_6", "-k", "a"}).out, r.out);
}

TEST(Cli, LaurentCheckSucceeds) {
  Result r = run({"laurent-check", "--seed", "ex2_6", "--max-len", "4"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, StrictValidationRejectsReducible) {
  Result r = run({"validate", "--seed", "reducible", "--strict"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness: x2 + 1"), std::string::npos) << r.out;
  EXPECT_EQ(run({"validate", "--seed", "reducible"}).code, 0);
}

TEST(Cli, ClusterToLpRejection) {
  Result r = run({"cluster", "to-lp", "--seed", "ex2_24"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness: x2 + 1"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"mutate", "--seed", "ex2_6"}).code, 2);
  EXPECT_EQ(run({"mutate", "--seed", "ex2_6", "-k", "z"}).code, 2);
  EXPECT_EQ(run({"hat", "--seed", "/nonexistent/seed.json"}).code, 2);
  EXPECT_EQ(run({"hat", "--seed", "ex2_24"}).code, 2);
  EXPECT_EQ(run({"member", "--seed", "ex4_24", "--expr", "a + z"}).code, 2);
}

TEST(Cli, UnreadableAndMalformedFiles) {
  TempDir dir;
  const fs::path bad = dir.path() / "bad.json";
  std::ofstream(bad) << "{ not json";
  Result r = run({"hat", "--seed", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  const fs::path wrong = dir.path() / "wrong.json";
  std::ofstream(wrong) << R"({"vars": ["a"], "exchange": {"a": "b + 1"}})";
  EXPECT_EQ(run({"hat", "--seed", wrong.string()}).code, 2);
}

TEST(Cli, MembershipExitCodes) {
  EXPECT_EQ(run({"member", "--seed", "ex4_24", "--expr", "(b*c*d + 1)/a"}).code, 0);
  EXPECT_EQ(run({"member", "--seed", "ex4_24", "--expr", "1/a"}).code, 1);
  EXPECT_EQ(run({"member", "--seed", "ex4_24", "--expr", "1/a", "--which", "lower"}).code, 1);
  EXPECT_EQ(run({"member", "--seed", "ex4_24", "--expr", "1/(a + 1)"}).code, 1);
  nlohmann::json j = run_json({"member", "--seed", "ex4_24", "--expr", "1/b", "--which", "imphi"});
  EXPECT_EQ(j["monoid_certificate"], nlohmann::json({1, 1, 1}));
  EXPECT_TRUE(j["member"].get<bool>());
  nlohmann::json p = run_json({"member", "--seed", "ex4_24", "--expr", "b'*c'*d' - d", "--which", "phi"});
  EXPECT_EQ(p["image"], "1/b");
}

TEST(Cli, ConditionReportAsJson) {
  nlohmann::json j = run_json({"condition12", "--seed", "ex4_24"});
  EXPECT_EQ(j["J"], nlohmann::json({"c"}));
  for (const char* c : {"i", "ii", "iii", "iv"}) EXPECT_TRUE(j["holds"][c].get<bool>()) << c;
  nlohmann::json m = run_json({"mutate", "--seed", "ex4_11", "-k", "b"});
  TempDir dir;
  const fs::path f = dir.path() / "mutated.json";
  std::ofstream(f) << m["seed"].dump();
  nlohmann::json c = run_json({"condition12", "--seed", f.string()});
  EXPECT_FALSE(c["holds"]["i"].get<bool>());
  EXPECT_EQ(c["witnesses"]["i"][0]["variable"], "c");
}

TEST(Cli, ProbesAndChecks) {
  EXPECT_EQ(run({"basis-check", "--seed", "ex4_24", "--radius", "1"}).code, 0);
  EXPECT_EQ(run({"probe", "--seed", "ex4_24", "--kind", "lower-equals-upper", "--depth", "1", "--degree", "2"}).code, 0);
  nlohmann::json u = run_json({"probe", "--seed", "ex4_24", "--kind", "upper-invariance", "--depth", "1"});
  ASSERT_EQ(u["directions"].size(), 4u);
  EXPECT_EQ(u["directions"][2]["status"], "skip");
  EXPECT_EQ(u["directions"][0]["status"], "pass");
  EXPECT_EQ(run({"probe", "--seed", "ex2_6", "--kind", "cluster-determines-seed", "--depth", "2"}).code, 0);
  EXPECT_EQ(run({"orbit", "--seed", "ex2_6", "--depth", "2", "--probe"}).code, 0);
  EXPECT_EQ(run({"cluster", "check", "--seed", "ex2_24", "--depth", "3"}).code, 0);
  EXPECT_EQ(run({"cluster", "mutate", "--seed", "ex2_24", "-k", "x1"}).code, 0);
  EXPECT_EQ(run({"freeze", "--seed", "ex2_6", "-k", "c"}).code, 0);
  EXPECT_EQ(run({"mutate-word", "--seed", "ex2_6", "--word", "a,b,a"}).code, 0);
  EXPECT_EQ(run({"hat", "--seed", "ex2_6"}).code, 0);
}

TEST(Cli, ReportsAreByteStable) {
  for (std::vector<std::string> args : {std::vector<std::string>{"orbit", "--seed", "ex4_24", "--depth", "2", "--permutations"},
                                        {"condition12", "--seed", "ex4_24", "--json"},
                                        {"probe", "--seed", "ex4_24", "--kind", "upper-invariance", "--depth", "1"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Fixtures, BundledCatalogue) {
  nlohmann::json j = run_json({"fixtures"});
  std::vector<std::string> names;
  for (const auto& f : j["fixtures"]) {
    names.push_back(f["name"]);
    EXPECT_FALSE(f["provenance"].get<std::string>().empty());
  }
  for (const char* want : {"ex2_6", "ex2_16", "ex2_24", "ex4_11", "ex4_24"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
}

TEST(Fixtures, EmptyExtraDirectory) {
  TempDir dir;
  EXPECT_EQ(list_fixtures(dir.path().string()).size(), list_fixtures().size());
}

TEST(Fixtures, UserFixtureAppears) {
  TempDir dir;
  std::ofstream(dir.path() / "mine.json") << R"({"name": "mine", "kind": "lp", "provenance": "test",
      "seed": {"vars": ["x", "y"], "exchange": {"x": "y + 1", "y": "x + 1"}}})";
  auto all = list_fixtures(dir.path().string());
  EXPECT_EQ(all.size(), list_fixtures().size() + 1);
  EXPECT_EQ(all.back().name, "mine");
  Result r = run({"--fixtures-dir", dir.path().string(), "hat", "--seed", "mine"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("x: y + 1"), std::string::npos);
}

TEST(Fixtures, SeedsAreCanonicalAndValid) {
  for (const auto& f : list_fixtures()) {
    if (f.kind != "lp") continue;
    LPSeed s = seed_from_json(f.seed());
    EXPECT_TRUE(validate_seed(s, false).valid) << f.name;
    // stored exchange polynomials are already in canonical sign
    EXPECT_EQ(canonicalize(s).exchange, s.exchange) << f.name;
    EXPECT_EQ(seed_to_json(seed_from_json(seed_to_json(s))).dump(), seed_to_json(s).dump()) << f.name;
  }
}

}  // namespace
}  // namespace lpalg
