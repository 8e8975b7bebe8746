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

#include <memory>
#include <string>

#include <json.hpp>

#include "sebikg/corpus.hpp"
#include "sebikg/error.hpp"
#include "sebikg/linker.hpp"
#include "sebikg/llm_gateway.hpp"
#include "sebikg/ner.hpp"
#include "sebikg/pipeline.hpp"
#include "sebikg/rdf.hpp"
#include "sebikg/rdfgen.hpp"
#include "sebikg/text.hpp"
#include "test_support.hpp"

namespace sebikg::pipeline {
namespace {

using nlohmann::json;
using sebikg::testing::FixturePath;
using sebikg::testing::TempDir;

// Fixture-mode collaborators for one test.
class Harness {
 public:
  explicit Harness(json fixtures = json::parse(text::ReadFile(FixturePath("llm_fixtures.json"))))
      : gateway_({}, std::make_shared<llm::FixtureBackend>(std::move(fixtures))),
        prompts_(llm::PromptLibrary::Default()),
        recognizer_(ner::GazetteerRecognizer::Load(FixturePath("gazetteer.json"))),
        linker_({}, std::make_shared<linker::FixtureSource>(
                        linker::FixtureSource::Load(FixturePath("wikidata_fixtures.json")))) {
    ctx.gateway = &gateway_;
    ctx.prompts = &prompts_;
    ctx.recognizer = &recognizer_;
    ctx.linker = &linker_;
  }

  Context ctx;

 private:
  llm::Gateway gateway_;
  llm::PromptLibrary prompts_;
  ner::GazetteerRecognizer recognizer_;
  linker::Linker linker_;
};

corpus::Document Donation() { return corpus::LoadDocument(FixturePath("corpus/donation_of_constantine.txt")); }

const linker::LinkedEntity* Find(const PipelineOutput& out, const std::string& key) {
  for (const auto& e : out.entities) {
    if (e.key() == key) return &e;
  }
  return nullptr;
}

TEST(PipelineTest, FixtureRunProducesExpectedRecords) {
  Harness h;
  const auto result = RunPipeline(Donation(), h.ctx, {});
  EXPECT_TRUE(result.report.failures.empty());
  const auto& out = result.output;
  ASSERT_EQ(out.items.size(), 1u);
  EXPECT_EQ(out.items[0].item_title, "Donation of Constantine");
  EXPECT_EQ(out.items[0].alleged_creator.value_or(""), "Constantine the Great");

  const auto* valla = Find(out, "Lorenzo Valla");
  ASSERT_NE(valla, nullptr);
  EXPECT_EQ(valla->qid.value_or(""), "Q214115");
  EXPECT_EQ(valla->cluster.paragraph_indices, (std::vector<size_t>{0, 3, 7}));
  const auto* most = Find(out, "Most historians");
  ASSERT_NE(most, nullptr);
  EXPECT_TRUE(most->collective);
  // The emperor and the pope are subjects of the item, not cognizers.
  EXPECT_EQ(Find(out, "Constantine the Great"), nullptr);
  EXPECT_EQ(Find(out, "Rome"), nullptr);

  ASSERT_EQ(out.bundles.size(), 4u);
  const auto& vb = *std::find_if(out.bundles.begin(), out.bundles.end(),
                                 [](const auto& b) { return b.opinion.cognizer_id == "Lorenzo Valla"; });
  EXPECT_EQ(vb.opinion.opinion, model::OpinionClass::kForgery);
  ASSERT_FALSE(vb.evidences.empty());
  EXPECT_EQ(vb.evidences[0].feature_label, "philological arguments");
  EXPECT_EQ(vb.evidences[0].evaluation, model::EvaluationCriterion::kConsistency);
  EXPECT_NO_THROW(CheckReferences(out));
}

TEST(PipelineTest, EntityParallelismKeepsOrder) {
  Harness h;
  const auto serial = RunPipeline(Donation(), h.ctx, {}).output;
  h.ctx.entity_jobs = 4;
  EXPECT_EQ(RunPipeline(Donation(), h.ctx, {}).output, serial);
}

TEST(PipelineTest, ResumingFromArtifactsMatchesAFullRun) {
  Harness h;
  TempDir full, split;
  const auto whole = RunPipeline(Donation(), h.ctx, {full.str(), 1, 6}).output;
  RunPipeline(Donation(), h.ctx, {split.str(), 1, 3});
  EXPECT_FALSE(std::filesystem::exists(split.path() / "donation_of_constantine" / "stage4.json"));
  const auto resumed = RunPipeline(Donation(), h.ctx, {split.str(), 4, 6}).output;
  EXPECT_EQ(resumed.items, whole.items);
  EXPECT_EQ(resumed.entities, whole.entities);
  EXPECT_EQ(resumed.bundles, whole.bundles);
  for (int s = 1; s <= 6; ++s) {
    const std::string name = "stage" + std::to_string(s) + ".json";
    EXPECT_EQ(text::ReadFile((full.path() / "donation_of_constantine" / name).string()),
              text::ReadFile((split.path() / "donation_of_constantine" / name).string()))
        << name;
  }
  const auto loaded = LoadArtifacts((full.path() / "donation_of_constantine").string());
  EXPECT_EQ(loaded.bundles, whole.bundles);
  EXPECT_EQ(rdf::SerializeTurtleStar(rdfgen::MapOutput(loaded)), rdf::SerializeTurtleStar(rdfgen::MapOutput(whole)));
}

TEST(PipelineTest, EntityFailuresAreRecordedAndSkipped) {
  json fixtures = json::parse(text::ReadFile(FixturePath("llm_fixtures.json")));
  fixtures.erase("stage5/donation_of_constantine/nicholas_of_cusa_about_donation_of_constantine");
  fixtures["stage4/donation_of_constantine/reginald_pecocke"] = "not json at all";
  Harness h(fixtures);
  const auto result = RunPipeline(Donation(), h.ctx, {});
  ASSERT_EQ(result.report.failures.size(), 2u);
  EXPECT_EQ(result.report.failures[0].stage, 4);
  EXPECT_EQ(result.report.failures[0].entity, "Reginald Pecocke");
  EXPECT_EQ(result.report.failures[1].stage, 5);
  // Valla and the collective still make it through.
  EXPECT_EQ(result.output.bundles.size(), 3u);
  EXPECT_NE(Find(result.output, "Lorenzo Valla"), nullptr);
  const auto report = ReportToJson(result.report);
  EXPECT_EQ(report.at("failures").size(), 2u);
}

TEST(PipelineTest, StageOneFailureIsFatal) {
  json fixtures = json::parse(text::ReadFile(FixturePath("llm_fixtures.json")));
  fixtures.erase("stage1/donation_of_constantine");
  Harness h(fixtures);
  try {
    RunPipeline(Donation(), h.ctx, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kFatalStage);
  }
}

TEST(PipelineTest, ConfigValidation) {
  EXPECT_NO_THROW((PipelineConfig{"", 1, 6}.Validate()));
  EXPECT_THROW((PipelineConfig{"", 2, 6}.Validate()), Error);  // resume needs a directory
  EXPECT_THROW((PipelineConfig{"out", 4, 3}.Validate()), Error);
  EXPECT_THROW((PipelineConfig{"out", 0, 6}.Validate()), Error);
  EXPECT_THROW((PipelineConfig{"out", 1, 7}.Validate()), Error);
}

TEST(PipelineTest, ArtifactCodecsRoundTrip) {
  Harness h;
  const auto result = RunPipeline(Donation(), h.ctx, {});
  const auto& out = result.output;
  EXPECT_EQ(Stage1FromJson(Stage1ToJson(out.doc_id, out.items)), out.items);
  EXPECT_EQ(Stage2FromJson(Stage2ToJson(out.doc_id, result.decisions)), result.decisions);
  EXPECT_EQ(Stage3FromJson(Stage3ToJson(out.doc_id, out.entities)), out.entities);
  EXPECT_EQ(BundlesFromJson(Stage4ToJson(out.doc_id, out.bundles), Stage5ToJson(out.doc_id, out.bundles),
                            Stage6ToJson(out.doc_id, out.bundles)),
            out.bundles);
  for (int s : {1, 4, 5, 6}) {
    const json artifact = s == 1   ? Stage1ToJson(out.doc_id, out.items)
                          : s == 4 ? Stage4ToJson(out.doc_id, out.bundles)
                          : s == 5 ? Stage5ToJson(out.doc_id, out.bundles)
                                   : Stage6ToJson(out.doc_id, out.bundles);
    EXPECT_NO_THROW(ValidateArtifact(s, artifact)) << s;
  }
  EXPECT_THROW(ValidateArtifact(1, json::object()), Error);
}

TEST(PipelineTest, KeysMatchMappedLocalNames) {
  linker::LinkedEntity valla;
  valla.cluster.primary_mention = "Lorenzo Valla";
  EXPECT_EQ(EntityKey(valla), "lorenzo_valla");
  EXPECT_EQ(PairKey(valla, "Donation of Constantine"), "lorenzo_valla_about_donation_of_constantine");
}

}  // namespace
}  // namespace sebikg::pipeline
