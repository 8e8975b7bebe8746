// Copyright 2026 The sebikg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sebikg/cli.hpp"
#include "sebikg/error.hpp"
#include "sebikg/text.hpp"
#include "test_support.hpp"

namespace sebikg::cli {
namespace {

using nlohmann::json;
using sebikg::testing::FixturePath;
using sebikg::testing::TempDir;
namespace fs = std::filesystem;

sebikg::testing::CommandResult Cli(const std::vector<std::string>& args) { return sebikg::testing::Run(args); }

sebikg::testing::CommandResult ExtractWith(const std::string& llm_fixtures, const std::string& out) {
  return Cli({"extract", "--fixtures", llm_fixtures, "--gazetteer", FixturePath("gazetteer.json"),
              "--wikidata-fixtures", FixturePath("wikidata_fixtures.json"), "--out", out, FixturePath("corpus")});
}

TEST(ConfigTest, ParsesKeyValueLines) {
  const auto values = ParseConfigText("# settings\nout = \"runs/a\"  # trailing\n\njobs=3\nllm.model = \"x\"\n");
  EXPECT_EQ(values.at("out"), "runs/a");
  EXPECT_EQ(values.at("jobs"), "3");
  EXPECT_EQ(values.at("llm.model"), "x");
  EXPECT_THROW(ParseConfigText("just words\n"), Error);
}

TEST(ConfigTest, AppliesKnownKeys) {
  RunConfig config;
  ApplyConfig({{"jobs", "4"},
               {"llm.max_retries", "5"},
               {"llm.requests_per_minute", "30"},
               {"linker.threshold", "0.8"},
               {"linker.weight_name", "0.6"},
               {"map.location_predicate", "http://purl.org/dc/terms/spatial"},
               {"ner.gazetteer", "g.json"}},
              config);
  EXPECT_EQ(config.jobs, 4u);
  EXPECT_EQ(config.backend.max_retries, 5);
  EXPECT_DOUBLE_EQ(config.backend.requests_per_minute, 30);
  EXPECT_DOUBLE_EQ(config.linker.threshold, 0.8);
  EXPECT_DOUBLE_EQ(config.linker.weights.name, 0.6);
  EXPECT_EQ(config.map.location_predicate, "http://purl.org/dc/terms/spatial");
  EXPECT_EQ(config.gazetteer, "g.json");
}

TEST(ConfigTest, RejectsUnknownKeysBadValuesAndSecrets) {
  RunConfig config;
  for (const auto& [key, value] : std::vector<std::pair<std::string, std::string>>{
           {"colour", "blue"}, {"jobs", "many"}, {"linker.threshold", "high"}, {"llm.api_key", "sk-123"},
           {"wikidata.token", "abc"}, {"llm.client_secret", "abc"}}) {
    try {
      ApplyConfig({{key, value}}, config);
      FAIL() << key;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kConfig) << key;
    }
  }
  // Naming the variable that holds the key is fine.
  EXPECT_NO_THROW(ApplyConfig({{"llm.api_key_env", "MY_KEY"}}, config));
  EXPECT_EQ(config.backend.api_key_env, "MY_KEY");
}

TEST(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitFatal);
  EXPECT_EQ(Cli({"extract", "--jobs", "0", "x"}).code, kExitFatal);
  const auto no_backend = Cli({"extract", "--out", "/tmp/unused", FixturePath("corpus")});
  EXPECT_EQ(no_backend.code, kExitFatal);
  EXPECT_NE(no_backend.err.find("error:"), std::string::npos);
}

TEST(CliTest, IngestReportsCorpusStats) {
  const auto r = Cli({"ingest", FixturePath("corpus")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("stats").at("doc_count"), 2);
  EXPECT_EQ(j.at("stats").at("per_category").at("Disputed"), 1);
}

TEST(CliTest, ExtractMapEvaluateStats) {
  TempDir dir;
  const auto extract = sebikg::testing::RunFixtureExtract(dir.str());
  ASSERT_EQ(extract.code, kExitOk) << extract.err;
  for (const char* doc : {"donation_of_constantine", "getty_kouros"}) {
    for (int s = 1; s <= 6; ++s) {
      EXPECT_TRUE(fs::exists(dir.path() / doc / ("stage" + std::to_string(s) + ".json"))) << doc << s;
    }
    EXPECT_TRUE(fs::exists(dir.path() / doc / "report.json"));
  }
  ASSERT_EQ(sebikg::testing::RunFixtureMap(dir.str()).code, kExitOk);

  // Scoring a run against itself is perfect on every axis.
  const std::string report_dir = (dir.path() / "eval").string();
  const auto eval = Cli({"evaluate", "--gold", dir.str(), "--fixtures", FixturePath("llm_fixtures.json"), "--out",
                         report_dir, dir.str()});
  ASSERT_EQ(eval.code, kExitOk) << eval.err;
  const auto j = json::parse(text::ReadFile(report_dir + "/evaluation.json"));
  EXPECT_DOUBLE_EQ(j.at("metadata").at("micro").at("f1"), 1.0);
  EXPECT_DOUBLE_EQ(j.at("entities").at("prf").at("f1"), 1.0);
  EXPECT_DOUBLE_EQ(j.at("evidence").at("mean_score"), 4.0);
  EXPECT_DOUBLE_EQ(j.at("hypotheses").at("macro").at("f1"), 1.0);
  EXPECT_DOUBLE_EQ(j.at("geval").at("correctness").at("summary").at("mean"), 1.0);

  const auto stats = Cli({"stats", "--out", report_dir, (dir.path() / "getty_kouros" / "getty_kouros.ttl").string(),
                          FixturePath("gt_scale.ttl")});
  ASSERT_EQ(stats.code, kExitOk) << stats.err;
  const auto sj = json::parse(text::ReadFile(report_dir + "/stats.json"));
  ASSERT_EQ(sj.size(), 2u);
  EXPECT_EQ(sj[0].at("interpretation_acts"), 2);
  EXPECT_EQ(sj[1].at("triples"), 4026);
  EXPECT_EQ(sj[1].at("interpretation_acts"), 170);
  EXPECT_EQ(sj[1].at("cognizers"), 164);
}

TEST(CliTest, PartialAndFatalExitCodes) {
  TempDir dir;
  json fixtures = json::parse(text::ReadFile(FixturePath("llm_fixtures.json")));
  fixtures.erase("stage5/getty_kouros/jiri_frel_about_getty_kouros");
  const std::string partial = (dir.path() / "partial.json").string();
  text::WriteFile(partial, fixtures.dump());
  const auto r = ExtractWith(partial, (dir.path() / "a").string());
  EXPECT_EQ(r.code, kExitPartial) << r.err;
  EXPECT_NE(r.err.find("stage 5"), std::string::npos) << r.err;

  fixtures.erase("stage1/getty_kouros");
  fixtures.erase("stage1/donation_of_constantine");
  const std::string fatal = (dir.path() / "fatal.json").string();
  text::WriteFile(fatal, fixtures.dump());
  const auto all_failed = ExtractWith(fatal, (dir.path() / "b").string());
  EXPECT_EQ(all_failed.code, kExitFatal) << all_failed.err;
}

TEST(CliTest, ConfigFileAndResume) {
  TempDir dir;
  const std::string cfg = (dir.path() / "run.conf").string();
  text::WriteFile(cfg, "fixtures = " + FixturePath("llm_fixtures.json") + "\nner.gazetteer = " +
                           FixturePath("gazetteer.json") + "\nlinker.fixtures = " +
                           FixturePath("wikidata_fixtures.json") + "\nstage_to = 3\n");
  const std::string out = (dir.path() / "run").string();
  ASSERT_EQ(Cli({"extract", "--config", cfg, "--out", out, FixturePath("corpus")}).code, kExitOk);
  EXPECT_FALSE(fs::exists(fs::path(out) / "getty_kouros" / "stage4.json"));
  const auto resumed = Cli({"extract", "--config", cfg, "--stage-from", "4", "--stage-to", "6", "--out", out,
                            FixturePath("corpus")});
  ASSERT_EQ(resumed.code, kExitOk) << resumed.err;
  EXPECT_TRUE(fs::exists(fs::path(out) / "getty_kouros" / "stage6.json"));
}

}  // namespace
}  // namespace sebikg::cli
