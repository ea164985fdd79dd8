#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>

#include "cuspcert/error.hpp"
#include "cuspcert/replay.hpp"
#include "test_support.hpp"

namespace cuspcert {
namespace {

const ReplayResult& full_run() {
  static const ReplayResult result = replay_all(testing::spec_text(), default_config_text());
  return result;
}

TEST(Replay, PassesAndIsComplete) {
  const auto& r = full_run();
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_TRUE(r.error.empty());
  EXPECT_TRUE(r.report.at("complete").get<bool>());
  EXPECT_EQ(r.report.at("overall"), "pass");
  for (const auto& c : r.report.at("checks")) EXPECT_TRUE(c.at("pass").get<bool>()) << c.dump();
}

TEST(Replay, EveryStagePresentOnce) {
  const auto& stages = full_run().report.at("stages");
  const std::vector<std::string> expected{"field",          "splitting", "presentation", "congruence", "gassmann",
                                          "index_subgroup", "cusps",     "cusp_bounds",  "sweeps",     "degrees"};
  std::vector<std::string> keys;
  for (const auto& [k, v] : stages.items()) keys.push_back(k);
  EXPECT_EQ(keys, expected);
}

TEST(Replay, ByteStable) {
  const auto again = replay_all(testing::spec_text(), default_config_text());
  EXPECT_EQ(report::serialize(again.report), report::serialize(full_run().report));
}

TEST(Replay, DiscrepanciesAreRecomputedAgainstPrinted) {
  const auto& d = full_run().report.at("discrepancies");
  std::vector<std::string> ids;
  for (const auto& x : d) ids.push_back(x.at("id").get<std::string>());
  EXPECT_NE(std::find(ids.begin(), ids.end(), "congruence.11.image.mu"), ids.end());
  for (const auto& x : full_run().report.at("paper_values"))
    if (x.at("id") != "field.min_poly" && x.at("id") != "congruence.11.image.mu") {
      EXPECT_TRUE(x.at("match").get<bool>()) << x.dump();
    }
}

TEST(Replay, ConfigMatchesShippedFile) {
  EXPECT_EQ(std::string(default_config_text()), testing::read_text(testing::data_path("replay_config.json")));
}

TEST(Replay, MalformedSpecGivesInputErrorAndPartialReport) {
  const auto r = replay_all("{\"name\": 3}", default_config_text());
  EXPECT_EQ(r.exit_code, kExitInputError);
  EXPECT_FALSE(r.report.at("complete").get<bool>());
  EXPECT_EQ(r.report.at("overall"), "fail");
  EXPECT_FALSE(r.error.empty());
}

TEST(Replay, RamifiedIdealChoiceIsInputError) {
  auto cfg = nlohmann::json::parse(default_config_text());
  cfg["ideals"] = {{{"p", 7}, {"root", 3}}};
  const auto r = replay_all(testing::spec_text(), cfg.dump());
  EXPECT_EQ(r.exit_code, kExitInputError);
  EXPECT_TRUE(r.report.at("stages").contains("field"));
}

TEST(Replay, WrongPrintedValueIsMismatch) {
  auto cfg = nlohmann::json::parse(default_config_text());
  cfg["printed"]["group_orders"]["7"] = 167;
  const auto r = replay_all(testing::spec_text(), cfg.dump());
  EXPECT_EQ(r.exit_code, kExitMismatch);
  EXPECT_EQ(r.report.at("overall"), "fail");
}

TEST(Replay, BadConfigIsParseError) {
  EXPECT_THROW((void)parse_config("[1,2]"), ParseError);
  EXPECT_THROW((void)parse_config(R"({"witnesses": {"seven": []}})"), ParseError);
}

TEST(Cli, ReplayExitsZeroAndWritesReport) {
  const std::string out = ::testing::TempDir() + "/cuspcert_report.json";
  const std::string cmd = std::string(CUSPCERT_CLI) + " replay --spec " + testing::data_path("k11n116.json") +
                          " --out " + out;
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(testing::read_text(out), report::serialize(full_run().report));
  std::remove(out.c_str());
}

TEST(Cli, MissingSpecExitsTwo) {
  const std::string cmd = std::string(CUSPCERT_CLI) + " split --spec /nonexistent.json --prime 7 2>/dev/null";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

TEST(Commands, SplitAndCusps) {
  const auto split = run_split(testing::knot_spec(), 11);
  EXPECT_EQ(split.at("inertia_degrees"), (report::Json{1, 1, 6}));
  const auto cusps = run_cusps(7, 24, 7);
  EXPECT_EQ(cusps.at("covers").size(), 2u);
  for (const auto& c : cusps.at("covers")) EXPECT_EQ(c.at("decomposition").at("cusp_count"), 1);
  EXPECT_EQ(cusps.at("lower_bound").at("exact_count"), 24);
}

}  // namespace
}  // namespace cuspcert
