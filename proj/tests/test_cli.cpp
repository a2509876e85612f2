#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(UTID_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& file) { return std::string(UTID_TEST_DATA) + "/" + file; }

std::string temp_path(const std::string& file) {
  return (std::filesystem::temp_directory_path() / ("utid-cli-test-" + file)).string();
}

}  // namespace

TEST(Cli, QuadrupleIdentityWitness) {
  const CliRun r = run("--input " + data("quadruple.json") + " --problem identity --witness");
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  const json& p = doc.at("results").at(0).at("problems");
  EXPECT_EQ(p.at("identity").at("verdict"), "yes");
  EXPECT_EQ(p.at("identity").at("witness"), json::array({1, 2, 3, 4}));
  EXPECT_FALSE(p.contains("u2"));
}

TEST(Cli, DiagonalPairIsAllNo) {
  const CliRun r = run("--input " + data("diagonal_pair.json"));
  ASSERT_EQ(r.status, 0);
  const json p = json::parse(r.out).at("results").at(0).at("problems");
  for (const char* t : {"identity", "u2", "u10"}) EXPECT_EQ(p.at(t).at("verdict"), "no") << t;
}

TEST(Cli, BadInputExitsWithTwo) {
  EXPECT_EQ(run("--input " + data("empty_generators.json")).status, 2);
  EXPECT_EQ(run("--input " + data("malformed.json")).status, 2);
  EXPECT_EQ(run("--input " + data("missing.json")).status, 2);
  EXPECT_EQ(run("--input " + data("quadruple.json") + " --no-such-flag").status, 2);
  EXPECT_EQ(run("--input " + data("quadruple.json") + " --problem everything").status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST(Cli, VerifyAndOracleFields) {
  const CliRun r = run("--input " + data("fixtures.json") + " --verify --oracle-maxlen 6");
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  ASSERT_EQ(doc.at("results").size(), 6u);
  for (const auto& rec : doc.at("results")) {
    EXPECT_EQ(rec.at("verified"), true);
    EXPECT_EQ(rec.at("oracle").at("agree"), true);
    EXPECT_EQ(rec.at("oracle").at("max_len"), 6);
  }
}

TEST(Cli, CheckRoundTrip) {
  const std::string out = temp_path("verdicts.json");
  ASSERT_EQ(run("--input " + data("fixtures.json") + " --witness --output " + out).status, 0);
  const CliRun ok = run("--check " + out);
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(ok.out, "ok\n");

  json doc;
  std::ifstream(out) >> doc;
  doc["results"][0]["problems"]["identity"]["witness"] = json::array({1, 1, 2});
  std::ofstream(out) << doc.dump();
  const CliRun bad = run("--check " + out);
  EXPECT_EQ(bad.status, 3);
  EXPECT_EQ(bad.out, "failed\n");
  std::filesystem::remove(out);
}

TEST(Cli, LemmaSuite) {
  const CliRun r = run("--lemma-suite 25 --seed 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("reversal-negates-D-E 25 0"), std::string::npos);
  EXPECT_EQ(run("--lemma-suite 0").status, 2);
}

TEST(Cli, OutputIsDeterministicApartFromTimings) {
  auto strip = [](json doc) {
    for (auto& rec : doc.at("results")) rec.erase("time_ms");
    return doc;
  };
  const CliRun a = run("--input " + data("fixtures.json") + " --witness --trace");
  const CliRun b = run("--input " + data("fixtures.json") + " --witness --trace");
  ASSERT_EQ(a.status, 0);
  ASSERT_EQ(b.status, 0);
  EXPECT_EQ(strip(json::parse(a.out)), strip(json::parse(b.out)));
}
