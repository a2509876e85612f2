#include <gtest/gtest.h>

#include "test_support.hpp"
#include "utid/io.hpp"

using namespace utid;
using nlohmann::json;
using utid::testing::UT;

namespace {

json quadruple_doc() {
  return json::parse(R"({"instances": [{"name": "quad", "generators":
    [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[-1,-1,-1,0,0,0]]}]})");
}

json record_for(const Instance& inst, bool witness) {
  RecordOptions opt;
  opt.witness = witness;
  json doc;
  doc["results"] = json::array({verdict_record(inst, decide(inst.generators), opt, 1.5)});
  return doc;
}

}  // namespace

TEST(ParseInstances, AcceptedShapes) {
  const auto a = parse_instances(quadruple_doc());
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].name, "quad");
  EXPECT_EQ(a[0].generators.size(), 4u);
  EXPECT_EQ(a[0].generators[3], UT(-1, -1, -1, 0, 0, 0));

  const auto b = parse_instances(json::parse(R"({"generators": [[0,0,0,1,2,3]]})"));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].name, "instance-1");

  const auto c = parse_instances(json::parse(R"([{"generators": [[0,0,0,0,0,1]]}, {"generators": [[1,0,0,0,0,0]]}])"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1].name, "instance-2");
}

TEST(ParseInstances, DecimalStringsKeepFullPrecision) {
  const auto x = parse_instances(json::parse(R"({"generators": [["0","0","0","-123456789012345678901234567890","0","7"]]})"));
  EXPECT_EQ(x[0].generators[0].d, BigInt("-123456789012345678901234567890"));
  EXPECT_EQ(x[0].generators[0].f, 7);
}

TEST(ParseInstances, Errors) {
  const char* bad[] = {
      R"({"generators": []})",
      R"({"generators": [[1,2,3]]})",
      R"({"generators": [[1,2,3,4,5,"x"]]})",
      R"({"generators": [[1,2,3,4,5,1.5]]})",
      R"({"instances": []})",
      R"({"instances": [{"name": "n"}]})",
      R"({"foo": 1})",
      R"(17)",
  };
  for (const char* s : bad) EXPECT_THROW(parse_instances(json::parse(s)), InputError) << s;
  EXPECT_THROW(load_instances("/nonexistent/path.json"), InputError);
}

TEST(GeneratorsToJson, RoundTrip) {
  const GeneratorSet G{UT(1, -2, 3, -4, 5, -6), Matrix::identity()};
  json doc;
  doc["generators"] = generators_to_json(G);
  EXPECT_EQ(parse_instances(doc)[0].generators, G);
}

TEST(VerdictRecord, Shape) {
  const Instance inst = parse_instances(quadruple_doc())[0];
  RecordOptions opt;
  opt.witness = true;
  opt.trace = true;
  opt.u2 = false;
  const json rec = verdict_record(inst, decide(inst.generators), opt, 2.0);
  EXPECT_EQ(rec.at("name"), "quad");
  EXPECT_TRUE(rec.at("problems").contains("identity"));
  EXPECT_FALSE(rec.at("problems").contains("u2"));
  const json& p = rec.at("problems").at("identity");
  EXPECT_EQ(p.at("verdict"), "yes");
  EXPECT_EQ(p.at("witness"), json::array({1, 2, 3, 4}));
  EXPECT_EQ(p.at("witness_length"), 4);
  EXPECT_FALSE(p.at("rule").get<std::string>().empty());
  EXPECT_TRUE(rec.at("trace").is_string());
  EXPECT_EQ(rec.at("time_ms"), 2.0);
}

TEST(CheckVerdicts, RoundTripAndTampering) {
  const Instance inst = parse_instances(quadruple_doc())[0];
  json doc = record_for(inst, true);
  EXPECT_TRUE(check_verdicts(doc).empty());

  json tampered = doc;
  tampered["results"][0]["problems"]["identity"]["witness"] = json::array({1, 2, 3});
  EXPECT_EQ(check_verdicts(tampered).size(), 1u);

  json inconsistent = doc;
  inconsistent["results"][0]["problems"]["u2"]["verdict"] = "no";
  EXPECT_EQ(check_verdicts(inconsistent).size(), 1u);

  json out_of_range = doc;
  out_of_range["results"][0]["problems"]["identity"]["witness"] = json::array({1, 5});
  EXPECT_THROW(check_verdicts(out_of_range), InputError);

  json bad_verdict = doc;
  bad_verdict["results"][0]["problems"]["u10"]["verdict"] = "maybe";
  EXPECT_THROW(check_verdicts(bad_verdict), InputError);

  EXPECT_THROW(check_verdicts(json::parse(R"({"results": [{"name": "x"}]})")), InputError);
}

TEST(CheckVerdicts, RecordsWithoutWitnessesPass) {
  const Instance inst = parse_instances(quadruple_doc())[0];
  EXPECT_TRUE(check_verdicts(record_for(inst, false)).empty());
}
