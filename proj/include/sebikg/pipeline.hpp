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


#ifndef SEBIKG_PIPELINE_HPP_
#define SEBIKG_PIPELINE_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sebikg/corpus.hpp"
#include "sebikg/decision.hpp"
#include "sebikg/linker.hpp"
#include "sebikg/llm_gateway.hpp"
#include "sebikg/model.hpp"
#include "sebikg/ner.hpp"
#include "sebikg/output.hpp"

namespace sebikg::pipeline {

struct StageFailure {
  int stage = 0;
  std::string entity;
  std::string error;

  bool operator==(const StageFailure&) const = default;
};

struct RunReport {
  std::string doc_id;
  std::vector<StageFailure> failures;  // sorted by (stage, entity, error)
  std::map<std::string, double> timings_ms;
};

// Everything the stages call out to. All members must outlive the run and
// be safe for concurrent use.
struct Context {
  const llm::Gateway* gateway = nullptr;
  const llm::PromptLibrary* prompts = nullptr;
  const ner::Recognizer* recognizer = nullptr;
  const linker::Linker* linker = nullptr;
  const model::FeatureAliasTable* aliases = &model::FeatureAliasTable::Default();
  ner::LabelSet labels = ner::AllLabels();
  size_t shots = 3;
  // Concurrent per-entity calls within a stage; results keep input order.
  size_t entity_jobs = 1;
};

struct PipelineConfig {
  std::string out_dir;  // artifacts go to <out_dir>/<doc_id>/; empty = keep in memory
  int stage_from = 1;   // earlier stages are loaded from existing artifacts
  int stage_to = 6;

  // Throws Error{kConfig} unless 1 <= from <= to <= 6 and resuming has an
  // output directory to read from.
  void Validate() const;
};

// Per-entity outcome collector shared by the stage functions.
using Failures = std::vector<StageFailure>;

// Fixture key of a cognizer and of a (cognizer, item) pair.
std::string EntityKey(const linker::LinkedEntity& entity);
std::string PairKey(const linker::LinkedEntity& entity, std::string_view item_title);

std::vector<model::ItemRecord> Stage1ExtractItemMetadata(const corpus::Document& doc,
                                                         const Context& ctx);

// Asks once per distinct span surface, passing the paragraphs that contain
// that surface's spans.
std::vector<CognizerDecision> Stage2IdentifyCognizers(const corpus::Document& doc,
                                                      std::span<const model::ItemRecord> items,
                                                      std::span<const ner::EntitySpan> spans,
                                                      const Context& ctx, Failures& failures);

// Clusters the cognizer decisions and links every cluster. Each entity's
// paragraph group is cluster.paragraph_indices.
std::vector<linker::LinkedEntity> Stage3ResolveEntities(std::span<const CognizerDecision> decisions,
                                                        std::span<const corpus::Paragraph> paragraphs,
                                                        const Context& ctx, Failures& failures);

std::vector<model::OpinionRecord> Stage4ExtractOpinions(const corpus::Document& doc,
                                                        const linker::LinkedEntity& entity,
                                                        std::span<const model::ItemRecord> items,
                                                        const Context& ctx, Failures& failures);

std::vector<model::EvidenceRecord> Stage5MineEvidence(const corpus::Document& doc,
                                                      const linker::LinkedEntity& entity,
                                                      const model::OpinionRecord& opinion,
                                                      const Context& ctx, Failures& failures);

std::vector<model::HypothesisRecord> Stage6ExtractHypotheses(
    const corpus::Document& doc, const linker::LinkedEntity& entity,
    const model::OpinionRecord& opinion, std::span<const model::EvidenceRecord> evidences,
    const Context& ctx, Failures& failures);

struct PipelineResult {
  PipelineOutput output;
  std::vector<CognizerDecision> decisions;
  RunReport report;
};

// Runs stages stage_from..stage_to in order, writing each artifact before
// the next stage starts. Entity-level failures are recorded and skipped;
// a stage-1 failure throws Error{kFatalStage}.
PipelineResult RunPipeline(const corpus::Document& doc, const Context& ctx,
                           const PipelineConfig& config);

// Artifact codecs. Records use the field names of the stage responses;
// absent optional fields are null (stage 1) or "" (stage 4).
nlohmann::json Stage1ToJson(std::string_view doc_id, std::span<const model::ItemRecord> items);
std::vector<model::ItemRecord> Stage1FromJson(const nlohmann::json& j);
nlohmann::json Stage2ToJson(std::string_view doc_id, std::span<const CognizerDecision> decisions);
std::vector<CognizerDecision> Stage2FromJson(const nlohmann::json& j);
nlohmann::json Stage3ToJson(std::string_view doc_id, std::span<const linker::LinkedEntity> entities);
std::vector<linker::LinkedEntity> Stage3FromJson(const nlohmann::json& j);
nlohmann::json Stage4ToJson(std::string_view doc_id, std::span<const OpinionBundle> bundles);
nlohmann::json Stage5ToJson(std::string_view doc_id, std::span<const OpinionBundle> bundles);
nlohmann::json Stage6ToJson(std::string_view doc_id, std::span<const OpinionBundle> bundles);
// Rebuilds bundles from stage 4 opinions plus the optional stage 5 and 6
// records (null when absent).
std::vector<OpinionBundle> BundlesFromJson(const nlohmann::json& stage4, const nlohmann::json& stage5,
                                           const nlohmann::json& stage6,
                                           const model::FeatureAliasTable& aliases =
                                               model::FeatureAliasTable::Default());

// Throws Error{kSchemaViolation} when an artifact does not match the
// response schema of its stage.
void ValidateArtifact(int stage, const nlohmann::json& artifact);

// Loads whatever stage artifacts exist in <dir> (stage1.json ... stage6.json)
// into a PipelineOutput. Missing stage files yield empty sections.
PipelineOutput LoadArtifacts(const std::string& dir);

nlohmann::json ReportToJson(const RunReport& report);

}  // namespace sebikg::pipeline

#endif  // SEBIKG_PIPELINE_HPP_
