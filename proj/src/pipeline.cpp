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


#include "sebikg/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <set>
#include <thread>

#include "sebikg/error.hpp"
#include "sebikg/json_schema.hpp"
#include "sebikg/rdfgen.hpp"
#include "sebikg/text.hpp"

namespace sebikg::pipeline {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::optional<std::string> OptStr(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) return std::nullopt;
  std::string value(text::Trim(j.at(key).get<std::string>()));
  if (value.empty()) return std::nullopt;
  return value;
}

json NullableStr(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::string ItemTitles(std::span<const model::ItemRecord> items) {
  json titles = json::array();
  for (const auto& i : items) titles.push_back(i.item_title);
  return titles.dump();
}

std::string JoinParagraphs(const corpus::Document& doc, std::span<const size_t> indices) {
  std::string out;
  for (size_t idx : indices) {
    if (idx >= doc.paragraphs.size()) continue;
    if (!out.empty()) out += "\n\n";
    out += "[" + std::to_string(idx) + "] " + doc.paragraphs[idx].text;
  }
  return out;
}

std::string OpinionSentence(const model::OpinionRecord& op) {
  return op.cognizer_id + " classifies " + op.subject_item + " as " +
         std::string(model::Render(op.opinion)) + ".";
}

std::string WikidataFacts(const linker::LinkedEntity& e) {
  if (!e.qid) return "not linked";
  std::string out = "Wikidata " + *e.qid;
  if (e.wikidata_label) out += ": " + *e.wikidata_label;
  if (!e.occupations.empty()) {
    out += "; occupations: ";
    for (size_t i = 0; i < e.occupations.size(); ++i) {
      if (i) out += ", ";
      out += e.occupations[i];
    }
  }
  if (e.birth_year) out += "; born " + std::to_string(*e.birth_year);
  if (e.death_year) out += "; died " + std::to_string(*e.death_year);
  return out;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. fn must not throw.
template <typename Fn>
void ParallelFor(size_t n, size_t jobs, Fn fn) {
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  for (size_t w = 0; w < std::min(jobs, n); ++w) {
    workers.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

std::optional<std::string> ResolveItem(std::string_view subject,
                                       std::span<const model::ItemRecord> items) {
  const std::string folded = text::FoldForMatch(subject);
  for (const auto& item : items) {
    if (text::FoldForMatch(item.item_title) == folded) return item.item_title;
  }
  std::string slug;
  try {
    slug = rdfgen::Slugify(subject);
  } catch (const Error&) {
    return std::nullopt;
  }
  for (const auto& item : items) {
    try {
      if (rdfgen::Slugify(item.item_title) == slug) return item.item_title;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

void RequireContext(const Context& ctx) {
  if (!ctx.gateway || !ctx.prompts || !ctx.recognizer || !ctx.linker || !ctx.aliases) {
    throw Error(ErrorKind::kConfig, "pipeline context is incomplete");
  }
}

std::string_view HypothesisSlot(model::HypothesisKind kind) {
  switch (kind) {
    case model::HypothesisKind::kAuthorship: return "authorship";
    case model::HypothesisKind::kDating: return "creation_date";
    case model::HypothesisKind::kLocation: return "location";
    case model::HypothesisKind::kMotivation: return "motivation";
  }
  return {};
}

void RequireValid(const json& schema, const json& value, const std::string& where) {
  const auto errors = schema::Validate(schema, value);
  if (!errors.empty()) {
    throw Error(ErrorKind::kSchemaViolation, where + ": " + errors.front());
  }
}

json OpinionJson(const model::OpinionRecord& op) {
  return {{"entity", op.cognizer_id},
          {"subject", op.subject_item},
          {"opinion", model::Render(op.opinion)},
          {"confidence", model::Render(op.confidence)},
          {"date", op.date.value_or("")},
          {"location", op.location.value_or("")}};
}

model::OpinionRecord OpinionFromJson(const json& j) {
  model::OpinionRecord op;
  op.cognizer_id = j.value("entity", "");
  op.subject_item = j.value("subject", "");
  op.opinion = model::ParseOpinionLabel(j.value("opinion", ""));
  if (auto c = OptStr(j, "confidence")) op.confidence = model::ParseConfidence(*c);
  op.date = OptStr(j, "date");
  op.location = OptStr(j, "location");
  return op;
}

model::EvidenceRecord EvidenceFromJson(const json& j, const model::FeatureAliasTable& aliases) {
  model::EvidenceRecord ev;
  ev.evidence_text = std::string(text::Trim(j.value("evidence", "")));
  if (ev.evidence_text.empty()) throw Error(ErrorKind::kParse, "evidence text is empty");
  ev.feature_label = OptStr(j, "feature_label").value_or(ev.evidence_text);
  ev.feature_class = model::ParseFeatureClass(j.value("feature", ""), aliases);
  ev.evaluation = model::ParseEvaluation(j.value("evaluation", ""));
  ev.polarity = model::ParsePolarity(j.value("polarity", ""));
  if (auto c = OptStr(j, "confidence")) ev.confidence = model::ParseConfidence(*c);
  return ev;
}

model::HypothesisRecord HypothesisFromJson(model::HypothesisKind kind, const json& j) {
  model::HypothesisRecord h;
  h.kind = kind;
  h.target_text = std::string(text::Trim(j.value("hypothesis", "")));
  if (h.target_text.empty()) throw Error(ErrorKind::kParse, "hypothesis target is empty");
  h.target_link = OptStr(j, "wikidata_id");
  if (auto c = OptStr(j, "confidence")) h.confidence = model::ParseConfidence(*c);
  h.polarity = model::ParseHypothesisPolarity(j.value("polarity", ""));
  return h;
}

json DecisionJson(const CognizerDecision& d) {
  return {{"entity", d.entity.surface},
          {"start", d.entity.start},
          {"end", d.entity.end},
          {"label", ner::LabelName(d.entity.label)},
          {"is_cognizer", d.is_cognizer},
          {"is_subject", d.is_subject},
          {"mentions", d.mentions}};
}

}  // namespace

void PipelineConfig::Validate() const {
  if (stage_from < 1 || stage_to > 6 || stage_from > stage_to) {
    throw Error(ErrorKind::kConfig, "stage range must satisfy 1 <= from <= to <= 6");
  }
  if (stage_from > 1 && out_dir.empty()) {
    throw Error(ErrorKind::kConfig, "resuming from a later stage needs an output directory");
  }
}

std::string EntityKey(const linker::LinkedEntity& entity) { return rdfgen::CognizerLocal(entity); }

std::string PairKey(const linker::LinkedEntity& entity, std::string_view item_title) {
  return rdfgen::ActLocal(rdfgen::CognizerLocal(entity), item_title);
}

std::vector<model::ItemRecord> Stage1ExtractItemMetadata(const corpus::Document& doc,
                                                         const Context& ctx) {
  if (text::Trim(doc.cleaned_text).empty()) return {};
  json response;
  try {
    const auto prompt = ctx.prompts->Build(llm::kStage1,
                                           {{"doc_id", doc.id}, {"document", doc.cleaned_text}},
                                           doc.id, std::nullopt, ctx.shots);
    response = ctx.gateway->CompleteStructured(prompt);
  } catch (const Error& e) {
    throw Error(ErrorKind::kFatalStage, "stage 1 failed for " + doc.id + ": " + e.what());
  }
  json list;
  if (response.is_object() && response.contains("item")) {
    list = json::array({response});
  } else if (response.is_array()) {
    list = response;
  } else {
    list = response.value("items", json::array());
  }
  std::vector<model::ItemRecord> items;
  std::set<std::string> seen;
  for (const auto& j : list) {
    model::ItemRecord item;
    item.item_title = std::string(text::Trim(j.value("item", "")));
    if (item.item_title.empty() || !seen.insert(text::FoldForMatch(item.item_title)).second) continue;
    item.alleged_creator = OptStr(j, "alleged_author");
    item.alleged_date = OptStr(j, "alleged_date");
    item.alleged_location = OptStr(j, "alleged_location");
    item.item_type = OptStr(j, "item_type");
    item.item_subject = OptStr(j, "item_subject");
    item.settled_creator = OptStr(j, "settled_author");
    item.settled_date = OptStr(j, "settled_date");
    item.settled_location = OptStr(j, "settled_location");
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<CognizerDecision> Stage2IdentifyCognizers(const corpus::Document& doc,
                                                      std::span<const model::ItemRecord> items,
                                                      std::span<const ner::EntitySpan> spans,
                                                      const Context& ctx, Failures& failures) {
  if (items.empty() || spans.empty()) return {};
  // Distinct surfaces in order of first occurrence.
  std::vector<std::string> surfaces;
  std::map<std::string, std::vector<const ner::EntitySpan*>> by_surface;
  for (const auto& s : spans) {
    auto& list = by_surface[s.surface];
    if (list.empty()) surfaces.push_back(s.surface);
    list.push_back(&s);
  }

  std::vector<std::optional<CognizerDecision>> results(surfaces.size());
  std::vector<Failures> local(surfaces.size());
  ParallelFor(surfaces.size(), ctx.entity_jobs, [&](size_t i) {
    const auto& group = by_surface.at(surfaces[i]);
    const ner::EntitySpan& first = *group.front();
    try {
      std::vector<size_t> paragraphs;
      for (const auto& p : doc.paragraphs) {
        for (const auto* s : group) {
          if (s->start >= p.char_start && s->start < p.char_end) {
            paragraphs.push_back(p.index);
            break;
          }
        }
      }
      const auto prompt = ctx.prompts->Build(
          llm::kStage2,
          {{"items", ItemTitles(items)},
           {"entity", first.surface},
           {"label", std::string(ner::LabelName(first.label))},
           {"start", std::to_string(first.start)},
           {"end", std::to_string(first.end)},
           {"paragraphs", JoinParagraphs(doc, paragraphs)}},
          doc.id, rdfgen::Slugify(first.surface), ctx.shots);
      const json r = ctx.gateway->CompleteStructured(prompt);
      CognizerDecision d;
      d.entity = first;
      d.is_cognizer = r.at("is_cognizer").get<bool>();
      d.is_subject = r.value("is_subject", false);
      d.mentions.push_back(first.surface);
      for (const auto& m : r.value("mentions", json::array())) {
        std::string mention = text::NormalizeWhitespace(m.get<std::string>());
        if (!mention.empty() &&
            std::find(d.mentions.begin(), d.mentions.end(), mention) == d.mentions.end()) {
          d.mentions.push_back(std::move(mention));
        }
      }
      results[i] = std::move(d);
    } catch (const std::exception& e) {
      local[i].push_back({2, first.surface, e.what()});
    }
  });
  std::vector<CognizerDecision> decisions;
  for (size_t i = 0; i < surfaces.size(); ++i) {
    if (results[i]) decisions.push_back(std::move(*results[i]));
    failures.insert(failures.end(), local[i].begin(), local[i].end());
  }
  return decisions;
}

std::vector<linker::LinkedEntity> Stage3ResolveEntities(std::span<const CognizerDecision> decisions,
                                                        std::span<const corpus::Paragraph> paragraphs,
                                                        const Context& ctx, Failures& failures) {
  std::vector<CognizerDecision> cognizers;
  for (const auto& d : decisions) {
    if (d.is_cognizer) cognizers.push_back(d);
  }
  const auto clusters = linker::ClusterMentions(cognizers, paragraphs);
  std::vector<std::optional<linker::LinkedEntity>> results(clusters.size());
  std::vector<Failures> local(clusters.size());
  ParallelFor(clusters.size(), ctx.entity_jobs, [&](size_t i) {
    try {
      results[i] = ctx.linker->Link(clusters[i]);
    } catch (const std::exception& e) {
      local[i].push_back({3, clusters[i].primary_mention, e.what()});
    }
  });
  std::vector<linker::LinkedEntity> out;
  for (size_t i = 0; i < clusters.size(); ++i) {
    if (results[i]) out.push_back(std::move(*results[i]));
    failures.insert(failures.end(), local[i].begin(), local[i].end());
  }
  return out;
}

std::vector<model::OpinionRecord> Stage4ExtractOpinions(const corpus::Document& doc,
                                                        const linker::LinkedEntity& entity,
                                                        std::span<const model::ItemRecord> items,
                                                        const Context& ctx, Failures& failures) {
  const auto& group = entity.cluster.paragraph_indices;
  if (group.empty() || items.empty()) return {};
  std::vector<model::OpinionRecord> out;
  try {
    const auto prompt = ctx.prompts->Build(llm::kStage4,
                                           {{"items", ItemTitles(items)},
                                            {"entity", entity.key()},
                                            {"wikidata", WikidataFacts(entity)},
                                            {"paragraphs", JoinParagraphs(doc, group)}},
                                           doc.id, EntityKey(entity), ctx.shots);
    const json r = ctx.gateway->CompleteStructured(prompt);
    std::set<std::string> seen;
    for (const auto& j : r.at("opinions")) {
      try {
        const std::string subject = j.value("subject", "");
        const auto title = ResolveItem(subject, items);
        if (!title) throw Error(ErrorKind::kParse, "opinion on unknown item '" + subject + "'");
        if (!seen.insert(*title).second) continue;
        model::OpinionRecord op = OpinionFromJson(j);
        op.cognizer_id = entity.key();
        op.subject_item = *title;
        out.push_back(std::move(op));
      } catch (const Error& e) {
        failures.push_back({4, entity.key(), e.what()});
      }
    }
  } catch (const std::exception& e) {
    failures.push_back({4, entity.key(), e.what()});
  }
  return out;
}

std::vector<model::EvidenceRecord> Stage5MineEvidence(const corpus::Document& doc,
                                                      const linker::LinkedEntity& entity,
                                                      const model::OpinionRecord& opinion,
                                                      const Context& ctx, Failures& failures) {
  std::vector<model::EvidenceRecord> out;
  const std::string key = PairKey(entity, opinion.subject_item);
  try {
    const auto prompt = ctx.prompts->Build(
        llm::kStage5,
        {{"opinion", OpinionSentence(opinion)},
         {"paragraphs", JoinParagraphs(doc, entity.cluster.paragraph_indices)}},
        doc.id, key, ctx.shots);
    const json r = ctx.gateway->CompleteStructured(prompt);
    for (const auto& j : r.at("evidence_evaluations")) {
      try {
        out.push_back(EvidenceFromJson(j, *ctx.aliases));
      } catch (const Error& e) {
        failures.push_back({5, key, e.what()});
      }
    }
  } catch (const std::exception& e) {
    failures.push_back({5, key, e.what()});
  }
  return out;
}

std::vector<model::HypothesisRecord> Stage6ExtractHypotheses(
    const corpus::Document& doc, const linker::LinkedEntity& entity,
    const model::OpinionRecord& opinion, std::span<const model::EvidenceRecord> evidences,
    const Context& ctx, Failures& failures) {
  std::vector<model::HypothesisRecord> out;
  const std::string key = PairKey(entity, opinion.subject_item);
  try {
    std::string evidence;
    for (const auto& ev : evidences) {
      if (!evidence.empty()) evidence += "; ";
      evidence += ev.feature_label;
    }
    const auto prompt = ctx.prompts->Build(llm::kStage6,
                                           {{"opinion", OpinionSentence(opinion)},
                                            {"evidence", evidence.empty() ? "none" : evidence},
                                            {"document", doc.cleaned_text}},
                                           doc.id, key, ctx.shots);
    const json r = ctx.gateway->CompleteStructured(prompt);
    for (const auto& [slot, value] : r.at("hypotheses").items()) {
      try {
        const auto kind = model::ParseHypothesisKind(slot);
        const json list = value.is_array() ? value : json::array({value});
        for (const auto& j : list) out.push_back(HypothesisFromJson(kind, j));
      } catch (const Error& e) {
        failures.push_back({6, key, e.what()});
      }
    }
  } catch (const std::exception& e) {
    failures.push_back({6, key, e.what()});
  }
  return out;
}

json Stage1ToJson(std::string_view doc_id, std::span<const model::ItemRecord> items) {
  json list = json::array();
  for (const auto& i : items) {
    list.push_back({{"item", i.item_title},
                    {"alleged_author", NullableStr(i.alleged_creator)},
                    {"alleged_date", NullableStr(i.alleged_date)},
                    {"alleged_location", NullableStr(i.alleged_location)},
                    {"item_type", NullableStr(i.item_type)},
                    {"item_subject", NullableStr(i.item_subject)},
                    {"settled_author", NullableStr(i.settled_creator)},
                    {"settled_date", NullableStr(i.settled_date)},
                    {"settled_location", NullableStr(i.settled_location)}});
  }
  return {{"doc_id", doc_id}, {"items", list}};
}

std::vector<model::ItemRecord> Stage1FromJson(const json& j) {
  std::vector<model::ItemRecord> items;
  for (const auto& r : j.at("items")) {
    model::ItemRecord i;
    i.item_title = r.at("item").get<std::string>();
    i.alleged_creator = OptStr(r, "alleged_author");
    i.alleged_date = OptStr(r, "alleged_date");
    i.alleged_location = OptStr(r, "alleged_location");
    i.item_type = OptStr(r, "item_type");
    i.item_subject = OptStr(r, "item_subject");
    i.settled_creator = OptStr(r, "settled_author");
    i.settled_date = OptStr(r, "settled_date");
    i.settled_location = OptStr(r, "settled_location");
    items.push_back(std::move(i));
  }
  return items;
}

json Stage2ToJson(std::string_view doc_id, std::span<const CognizerDecision> decisions) {
  json list = json::array();
  for (const auto& d : decisions) list.push_back(DecisionJson(d));
  return {{"doc_id", doc_id}, {"entities", list}};
}

std::vector<CognizerDecision> Stage2FromJson(const json& j) {
  std::vector<CognizerDecision> out;
  for (const auto& r : j.at("entities")) {
    CognizerDecision d;
    d.entity.surface = r.at("entity").get<std::string>();
    d.entity.start = r.value("start", size_t{0});
    d.entity.end = r.value("end", d.entity.start + d.entity.surface.size());
    d.entity.label = ner::ParseLabel(r.value("label", "person"));
    d.is_cognizer = r.at("is_cognizer").get<bool>();
    d.is_subject = r.value("is_subject", false);
    d.mentions = r.value("mentions", std::vector<std::string>{});
    if (std::find(d.mentions.begin(), d.mentions.end(), d.entity.surface) == d.mentions.end()) {
      d.mentions.insert(d.mentions.begin(), d.entity.surface);
    }
    out.push_back(std::move(d));
  }
  return out;
}

json Stage3ToJson(std::string_view doc_id, std::span<const linker::LinkedEntity> entities) {
  json list = json::array();
  for (const auto& e : entities) {
    list.push_back({{"primary_mention", e.cluster.primary_mention},
                    {"all_mentions", e.cluster.all_mentions},
                    {"entity_type", ner::LabelName(e.cluster.entity_type)},
                    {"paragraphs", e.cluster.paragraph_indices},
                    {"wikidata_label", NullableStr(e.wikidata_label)},
                    {"wikidata_id", NullableStr(e.qid)},
                    {"occupation", e.occupations},
                    {"birth_year", e.birth_year ? json(*e.birth_year) : json(nullptr)},
                    {"death_year", e.death_year ? json(*e.death_year) : json(nullptr)},
                    {"mentions", e.cluster.all_mentions},
                    {"link_score", e.link_score},
                    {"collective", e.collective}});
  }
  return {{"doc_id", doc_id}, {"entities", list}};
}

std::vector<linker::LinkedEntity> Stage3FromJson(const json& j) {
  std::vector<linker::LinkedEntity> out;
  for (const auto& r : j.at("entities")) {
    linker::LinkedEntity e;
    e.cluster.all_mentions = r.value("all_mentions", r.value("mentions", std::vector<std::string>{}));
    e.cluster.primary_mention = r.value("primary_mention", "");
    if (e.cluster.primary_mention.empty()) {
      for (const auto& m : e.cluster.all_mentions) {
        if (m.size() > e.cluster.primary_mention.size()) e.cluster.primary_mention = m;
      }
    }
    if (e.cluster.primary_mention.empty()) throw Error(ErrorKind::kParse, "stage 3 entity without mentions");
    if (std::find(e.cluster.all_mentions.begin(), e.cluster.all_mentions.end(),
                  e.cluster.primary_mention) == e.cluster.all_mentions.end()) {
      e.cluster.all_mentions.insert(e.cluster.all_mentions.begin(), e.cluster.primary_mention);
    }
    e.cluster.entity_type = ner::ParseLabel(r.value("entity_type", "person"));
    e.cluster.paragraph_indices = r.value("paragraphs", std::vector<size_t>{});
    e.wikidata_label = OptStr(r, "wikidata_label");
    e.qid = OptStr(r, "wikidata_id");
    e.occupations = r.value("occupation", std::vector<std::string>{});
    if (r.contains("birth_year") && r["birth_year"].is_number()) e.birth_year = r["birth_year"].get<int>();
    if (r.contains("death_year") && r["death_year"].is_number()) e.death_year = r["death_year"].get<int>();
    e.link_score = r.value("link_score", 0.0);
    e.collective = r.value("collective", false);
    out.push_back(std::move(e));
  }
  return out;
}

json Stage4ToJson(std::string_view doc_id, std::span<const OpinionBundle> bundles) {
  json list = json::array();
  for (const auto& b : bundles) list.push_back(OpinionJson(b.opinion));
  return {{"doc_id", doc_id}, {"opinions", list}};
}

json Stage5ToJson(std::string_view doc_id, std::span<const OpinionBundle> bundles) {
  json list = json::array();
  for (const auto& b : bundles) {
    for (const auto& ev : b.evidences) {
      list.push_back({{"entity", b.opinion.cognizer_id},
                      {"subject", b.opinion.subject_item},
                      {"evidence", ev.evidence_text},
                      {"feature_label", ev.feature_label},
                      {"feature", model::Render(ev.feature_class)},
                      {"evaluation", model::Render(ev.evaluation)},
                      {"polarity", model::Render(ev.polarity)},
                      {"confidence", model::Render(ev.confidence)}});
    }
  }
  return {{"doc_id", doc_id}, {"evidence_evaluations", list}};
}

json Stage6ToJson(std::string_view doc_id, std::span<const OpinionBundle> bundles) {
  json list = json::array();
  for (const auto& b : bundles) {
    for (const auto& h : b.hypotheses) {
      list.push_back({{"entity", b.opinion.cognizer_id},
                      {"subject", b.opinion.subject_item},
                      {"kind", model::Render(h.kind)},
                      {"hypothesis", h.target_text},
                      {"confidence", model::Render(h.confidence)},
                      {"polarity", model::Render(h.polarity)},
                      {"wikidata_id", NullableStr(h.target_link)}});
    }
  }
  return {{"doc_id", doc_id}, {"hypotheses", list}};
}

std::vector<OpinionBundle> BundlesFromJson(const json& stage4, const json& stage5,
                                           const json& stage6,
                                           const model::FeatureAliasTable& aliases) {
  std::vector<OpinionBundle> bundles;
  std::map<std::pair<std::string, std::string>, size_t> index;
  for (const auto& r : stage4.at("opinions")) {
    OpinionBundle b;
    b.opinion = OpinionFromJson(r);
    index.emplace(std::make_pair(b.opinion.cognizer_id, b.opinion.subject_item), bundles.size());
    bundles.push_back(std::move(b));
  }
  auto find = [&](const json& r, int stage) -> OpinionBundle& {
    const auto key = std::make_pair(r.value("entity", ""), r.value("subject", ""));
    auto it = index.find(key);
    if (it == index.end()) {
      throw Error(ErrorKind::kParse, "stage " + std::to_string(stage) + " record for '" + key.first +
                                         "' about '" + key.second + "' has no stage 4 opinion");
    }
    return bundles[it->second];
  };
  if (!stage5.is_null()) {
    for (const auto& r : stage5.at("evidence_evaluations")) {
      find(r, 5).evidences.push_back(EvidenceFromJson(r, aliases));
    }
  }
  if (!stage6.is_null()) {
    for (const auto& r : stage6.at("hypotheses")) {
      find(r, 6).hypotheses.push_back(
          HypothesisFromJson(model::ParseHypothesisKind(r.value("kind", "")), r));
    }
  }
  return bundles;
}

void ValidateArtifact(int stage, const json& artifact) {
  const std::string where = "stage" + std::to_string(stage) + " artifact";
  switch (stage) {
    case 1:
    case 4:
    case 5:
      RequireValid(llm::SchemaFor("stage" + std::to_string(stage)), artifact, where);
      return;
    case 2:
    case 3:
      if (!artifact.contains("entities") || !artifact["entities"].is_array()) {
        throw Error(ErrorKind::kSchemaViolation, where + ": missing entities list");
      }
      for (const auto& r : artifact["entities"]) {
        RequireValid(llm::SchemaFor("stage" + std::to_string(stage)), r, where);
      }
      return;
    case 6:
      if (!artifact.contains("hypotheses") || !artifact["hypotheses"].is_array()) {
        throw Error(ErrorKind::kSchemaViolation, where + ": missing hypotheses list");
      }
      for (const auto& r : artifact["hypotheses"]) {
        json slot = r;
        slot.erase("entity");
        slot.erase("subject");
        slot.erase("kind");
        const auto kind = model::ParseHypothesisKind(r.value("kind", ""));
        RequireValid(llm::SchemaFor("stage6"),
                     {{"hypotheses", {{std::string(HypothesisSlot(kind)), slot}}}}, where);
      }
      return;
    default:
      throw Error(ErrorKind::kConfig, "no stage " + std::to_string(stage));
  }
}

PipelineOutput LoadArtifacts(const std::string& dir) {
  PipelineOutput out;
  out.doc_id = fs::path(dir).filename().string();
  json stages[7];
  for (int s = 1; s <= 6; ++s) {
    const fs::path path = fs::path(dir) / ("stage" + std::to_string(s) + ".json");
    std::error_code ec;
    if (!fs::exists(path, ec)) continue;
    stages[s] = json::parse(text::ReadFile(path.string()), nullptr, false);
    if (stages[s].is_discarded()) throw Error(ErrorKind::kParse, "malformed " + path.string());
    out.stage_artifacts.push_back(path.string());
  }
  if (!stages[1].is_null()) {
    out.doc_id = stages[1].value("doc_id", out.doc_id);
    out.items = Stage1FromJson(stages[1]);
  }
  if (!stages[3].is_null()) out.entities = Stage3FromJson(stages[3]);
  if (!stages[4].is_null()) out.bundles = BundlesFromJson(stages[4], stages[5], stages[6]);
  return out;
}

json ReportToJson(const RunReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"stage", f.stage}, {"entity", f.entity}, {"error", f.error}});
  }
  return {{"doc_id", report.doc_id}, {"failures", failures}, {"timings", report.timings_ms}};
}

PipelineResult RunPipeline(const corpus::Document& doc, const Context& ctx,
                           const PipelineConfig& config) {
  config.Validate();
  RequireContext(ctx);
  PipelineResult result;
  PipelineOutput& out = result.output;
  out.doc_id = doc.id;
  result.report.doc_id = doc.id;
  Failures& failures = result.report.failures;

  fs::path dir;
  if (!config.out_dir.empty()) {
    dir = fs::path(config.out_dir) / doc.id;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::kIo, "cannot create " + dir.string() + ": " + ec.message());
  }
  auto artifact_path = [&](int stage) { return dir / ("stage" + std::to_string(stage) + ".json"); };
  auto write = [&](int stage, const json& artifact) {
    ValidateArtifact(stage, artifact);
    if (dir.empty()) return;
    text::WriteFile(artifact_path(stage).string(), artifact.dump(2) + "\n");
    out.stage_artifacts.push_back(artifact_path(stage).string());
  };
  auto load = [&](int stage) {
    const std::string path = artifact_path(stage).string();
    std::error_code ec;
    if (!fs::exists(path, ec)) {
      throw Error(ErrorKind::kConfig, "cannot resume: " + path + " does not exist");
    }
    json j = json::parse(text::ReadFile(path), nullptr, false);
    if (j.is_discarded()) throw Error(ErrorKind::kParse, "malformed artifact " + path);
    return j;
  };
  auto timed = [&](int stage, auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    result.report.timings_ms["stage" + std::to_string(stage)] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  auto finish = [&]() -> PipelineResult& {
    std::sort(failures.begin(), failures.end(), [](const StageFailure& a, const StageFailure& b) {
      return std::tie(a.stage, a.entity, a.error) < std::tie(b.stage, b.entity, b.error);
    });
    CheckReferences(out);
    if (!dir.empty()) {
      text::WriteFile((dir / "report.json").string(), ReportToJson(result.report).dump(2) + "\n");
    }
    return result;
  };
  const bool run[7] = {false,
                       config.stage_from <= 1,
                       config.stage_from <= 2,
                       config.stage_from <= 3,
                       config.stage_from <= 4,
                       config.stage_from <= 5,
                       config.stage_from <= 6};

  // Stage 1: item metadata.
  if (run[1]) {
    timed(1, [&] { out.items = Stage1ExtractItemMetadata(doc, ctx); });
    write(1, Stage1ToJson(doc.id, out.items));
  } else {
    out.items = Stage1FromJson(load(1));
  }
  if (config.stage_to == 1) return finish();

  // Stage 2: cognizer identification over the recognizer's spans.
  if (run[2]) {
    timed(2, [&] {
      std::vector<ner::EntitySpan> spans;
      if (!out.items.empty()) {
        try {
          spans = ctx.recognizer->Recognize(doc.cleaned_text, ctx.labels);
        } catch (const std::exception& e) {
          failures.push_back({2, "", std::string("recognizer: ") + e.what()});
        }
      }
      result.decisions = Stage2IdentifyCognizers(doc, out.items, spans, ctx, failures);
    });
    write(2, Stage2ToJson(doc.id, result.decisions));
  } else {
    result.decisions = Stage2FromJson(load(2));
  }
  if (config.stage_to == 2) return finish();

  // Stage 3: clustering and linking.
  if (run[3]) {
    timed(3, [&] {
      out.entities = Stage3ResolveEntities(result.decisions, doc.paragraphs, ctx, failures);
    });
    write(3, Stage3ToJson(doc.id, out.entities));
  } else {
    out.entities = Stage3FromJson(load(3));
  }
  if (config.stage_to == 3) return finish();

  // Stage 4: one bundle per (cognizer, item) opinion.
  if (run[4]) {
    timed(4, [&] {
      std::vector<std::vector<model::OpinionRecord>> per_entity(out.entities.size());
      std::vector<Failures> local(out.entities.size());
      ParallelFor(out.entities.size(), ctx.entity_jobs, [&](size_t i) {
        per_entity[i] = Stage4ExtractOpinions(doc, out.entities[i], out.items, ctx, local[i]);
      });
      for (size_t i = 0; i < out.entities.size(); ++i) {
        for (auto& op : per_entity[i]) out.bundles.push_back({std::move(op), {}, {}});
        failures.insert(failures.end(), local[i].begin(), local[i].end());
      }
    });
    write(4, Stage4ToJson(doc.id, out.bundles));
  } else {
    out.bundles = BundlesFromJson(load(4), run[5] ? json() : load(5), run[6] ? json() : load(6),
                                  *ctx.aliases);
  }
  if (config.stage_to == 4) return finish();

  std::map<std::string, const linker::LinkedEntity*> by_key;
  for (const auto& e : out.entities) by_key.emplace(e.key(), &e);
  auto entity_of = [&](const OpinionBundle& b) -> const linker::LinkedEntity& {
    auto it = by_key.find(b.opinion.cognizer_id);
    if (it == by_key.end()) {
      throw Error(ErrorKind::kMapping, "opinion by unknown cognizer '" + b.opinion.cognizer_id + "'");
    }
    return *it->second;
  };

  // Stage 5: evidence per bundle.
  if (run[5]) {
    timed(5, [&] {
      std::vector<Failures> local(out.bundles.size());
      ParallelFor(out.bundles.size(), ctx.entity_jobs, [&](size_t i) {
        auto& b = out.bundles[i];
        try {
          b.evidences = Stage5MineEvidence(doc, entity_of(b), b.opinion, ctx, local[i]);
        } catch (const std::exception& e) {
          local[i].push_back({5, b.opinion.cognizer_id, e.what()});
        }
      });
      for (auto& l : local) failures.insert(failures.end(), l.begin(), l.end());
    });
    write(5, Stage5ToJson(doc.id, out.bundles));
  }
  if (config.stage_to == 5) return finish();

  // Stage 6: hypotheses per bundle, with the full document as context.
  timed(6, [&] {
    std::vector<Failures> local(out.bundles.size());
    ParallelFor(out.bundles.size(), ctx.entity_jobs, [&](size_t i) {
      auto& b = out.bundles[i];
      try {
        b.hypotheses = Stage6ExtractHypotheses(doc, entity_of(b), b.opinion, b.evidences, ctx, local[i]);
      } catch (const std::exception& e) {
        local[i].push_back({6, b.opinion.cognizer_id, e.what()});
      }
    });
    for (auto& l : local) failures.insert(failures.end(), l.begin(), l.end());
  });
  write(6, Stage6ToJson(doc.id, out.bundles));
  return finish();
}

}  // namespace sebikg::pipeline
