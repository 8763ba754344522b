#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>

#include "hammock/dot.hpp"
#include "hammock/report.hpp"
#include "support/fixtures.hpp"
#include "support/golden.hpp"

namespace hammock {
namespace {

using testing::GoldenCase;

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesCheckedInReport) {
  const auto& c = GetParam();
  auto outcome = testing::run_golden(c);
  EXPECT_EQ(outcome.exit_code, c.exit_code) << outcome.err;
  if (c.name.empty()) {
    EXPECT_TRUE(outcome.out.empty() || c.exit_code != cli::kExitInput);
    EXPECT_FALSE(outcome.err.empty());
    return;
  }
  if (testing::update_goldens()) {
    std::ofstream(testing::golden_path(c), std::ios::binary) << outcome.out;
    if (!c.side_file.empty()) std::ofstream(testing::side_golden_path(c), std::ios::binary) << outcome.side;
    GTEST_SKIP() << "golden updated";
  }
  ASSERT_TRUE(std::filesystem::exists(testing::golden_path(c))) << testing::golden_path(c);
  EXPECT_EQ(outcome.out, testing::slurp(testing::golden_path(c)));
  if (!c.side_file.empty()) EXPECT_EQ(outcome.side, testing::slurp(testing::side_golden_path(c)));
  // Reruns are byte-identical.
  EXPECT_EQ(testing::run_golden(c).out, outcome.out);
}

std::string case_name(const ::testing::TestParamInfo<GoldenCase>& info) {
  if (!info.param.name.empty()) return info.param.name;
  return "input_error_" + std::to_string(info.index);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(testing::golden_cases()), case_name);

TEST(Cli, JsonReportsCarryTheContractFields) {
  for (const auto& c : testing::golden_cases()) {
    if (c.name.empty() || c.extension != "json") continue;
    auto outcome = testing::run_golden(c);
    auto j = Json::parse(outcome.out);
    for (const char* key : {"command", "inputs", "bounds", "verdict", "witnesses"}) {
      EXPECT_TRUE(j.contains(key)) << c.name << " lacks " << key;
    }
    EXPECT_FALSE(j.contains("timings")) << c.name;
    auto verdict = j["verdict"].get<std::string>();
    int expected = verdict == "PASS" ? 0 : verdict == "FAIL" ? 1 : 2;
    EXPECT_EQ(outcome.exit_code, expected) << c.name;
    EXPECT_EQ(j.contains("counterexample"), verdict == "FAIL") << c.name;
  }
}

TEST(Cli, TimingsAppearByDefault) {
  GoldenCase c{"", {"pi0", "weq.spec", "--from", "X", "--to", "X", "--emit", "json"}, 0};
  auto j = Json::parse(testing::run_golden(c).out);
  ASSERT_TRUE(j.contains("timings"));
  EXPECT_TRUE(j["timings"].contains("load"));
  EXPECT_TRUE(j["timings"].contains("compute"));
}

TEST(Cli, DefaultsAreEchoed) {
  GoldenCase pi0{"", {"pi0", "weq.spec", "--from", "X", "--to", "X", "--emit", "json"}, 0};
  EXPECT_EQ(Json::parse(testing::run_golden(pi0).out)["bounds"]["max_stage"], 7);
  GoldenCase oracle{"", {"oracle", "weq.spec", "--from", "X", "--to", "X", "--emit", "json"}, 0};
  EXPECT_EQ(Json::parse(testing::run_golden(oracle).out)["bounds"]["bound"], 8);
}

TEST(Cli, HelpExitsCleanly) {
  GoldenCase help{"", {"--help"}, 0};
  auto o = testing::run_golden(help);
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_NE(o.out.find("stage 7"), std::string::npos);
  EXPECT_NE(o.out.find("bound 8"), std::string::npos);
}

TEST(Cli, ParseErrorsNameTheirPosition) {
  GoldenCase c{"", {"validate", "syntax.spec"}, 3};
  auto o = testing::run_golden(c);
  EXPECT_NE(o.err.find("syntax.spec:3:"), std::string::npos) << o.err;
}

TEST(Dot, CountsMatchTheStage) {
  for (const char* file : {"weq.spec", "cylfix.spec", "para.spec"}) {
    auto r = testing::fixture_category(file);
    for (auto x : r->cat().objects()) {
      for (auto y : r->cat().objects()) {
        auto s = make_stage(r, x, y, 3);
        DotSummary summary;
        auto dot = stage_to_dot(*s, &summary);
        std::size_t ladders = 0;
        for (const auto& z : s->objects()) ladders += s->morphisms_from(z).size();
        EXPECT_EQ(summary.nodes, enumerate_zigzags(*r, x, y, 3).size());
        EXPECT_EQ(summary.edges, ladders - s->objects().size());
        std::regex edge(" -> z");
        auto count = std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge), std::sregex_iterator());
        EXPECT_EQ(static_cast<std::size_t>(count), summary.edges);
      }
    }
  }
}

TEST(Report, TextAndJsonShareContent) {
  Report r;
  r.command = "demo";
  r.inputs["file"] = "x.spec";
  r.bounds["stage"] = 3;
  r.verdict = Verdict::fail;
  r.witnesses.push_back(Json{{"check", "c"}, {"verdict", "FAIL"}});
  r.counterexample = to_json(Violation{"law", "message", {"a"}});
  r.timings.emplace_back("compute", 0.5);
  auto j = to_json(r, false);
  EXPECT_EQ(j["verdict"], "FAIL");
  EXPECT_FALSE(j.contains("timings"));
  EXPECT_EQ(to_json(r)["timings"]["compute"], 0.5);
  auto text = to_text(r, false);
  EXPECT_EQ(text.rfind("demo: FAIL\n", 0), 0u);
  EXPECT_NE(text.find("law: law"), std::string::npos);
  EXPECT_EQ(text.find("timings"), std::string::npos);
  EXPECT_NE(to_text(r).find("compute: 0.500s"), std::string::npos);
}

}  // namespace
}  // namespace hammock
