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


#include "sebikg/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sebikg/corpus.hpp"
#include "sebikg/error.hpp"
#include "sebikg/evaluator.hpp"
#include "sebikg/ner.hpp"
#include "sebikg/pipeline.hpp"
#include "sebikg/rdf.hpp"
#include "sebikg/text.hpp"

namespace sebikg::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

double ToDouble(const std::string& key, const std::string& v) {
  try {
    size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kConfig, "config key '" + key + "' expects a number, got '" + v + "'");
}

long ToInt(const std::string& key, const std::string& v) {
  const double d = ToDouble(key, v);
  if (d != static_cast<double>(static_cast<long>(d))) {
    throw Error(ErrorKind::kConfig, "config key '" + key + "' expects an integer, got '" + v + "'");
  }
  return static_cast<long>(d);
}

size_t ToCount(const std::string& key, const std::string& v) {
  const long n = ToInt(key, v);
  if (n < 0) throw Error(ErrorKind::kConfig, "config key '" + key + "' must not be negative");
  return static_cast<size_t>(n);
}

// Runs fn(i) for every index on up to `jobs` threads; fn must not throw.
template <typename Fn>
void ForEachDoc(size_t n, size_t jobs, Fn fn) {
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

std::vector<corpus::Document> LoadInputs(const std::vector<std::string>& inputs) {
  std::vector<corpus::Document> docs;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      auto more = corpus::LoadDirectory(in);
      std::move(more.begin(), more.end(), std::back_inserter(docs));
    } else {
      docs.push_back(corpus::LoadDocument(in));
    }
  }
  if (docs.empty()) throw Error(ErrorKind::kEmptyCorpus, "no input documents");
  return docs;
}

bool IsArtifactDir(const fs::path& dir) {
  std::error_code ec;
  for (int s = 1; s <= 6; ++s) {
    if (fs::exists(dir / ("stage" + std::to_string(s) + ".json"), ec)) return true;
  }
  return false;
}

// Artifact directories named by the inputs: each input is either one
// document directory or a root holding one directory per document.
std::vector<fs::path> ArtifactDirs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> dirs;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (!fs::is_directory(in, ec)) throw Error(ErrorKind::kIo, "not a directory: " + in);
    if (IsArtifactDir(in)) {
      dirs.emplace_back(in);
      continue;
    }
    std::vector<fs::path> found;
    for (const auto& entry : fs::directory_iterator(in)) {
      if (entry.is_directory() && IsArtifactDir(entry.path())) found.push_back(entry.path());
    }
    std::sort(found.begin(), found.end());
    dirs.insert(dirs.end(), found.begin(), found.end());
  }
  return dirs;
}

const model::FeatureAliasTable& Aliases(const RunConfig& config,
                                        std::optional<model::FeatureAliasTable>& storage) {
  if (config.feature_aliases.empty()) return model::FeatureAliasTable::Default();
  storage = model::FeatureAliasTable::Load(config.feature_aliases);
  return *storage;
}

PipelineOutput LoadOutput(const fs::path& dir, const model::FeatureAliasTable& aliases) {
  PipelineOutput out = pipeline::LoadArtifacts(dir.string());
  // Reload bundles with the configured alias table.
  auto read = [&](int stage) -> json {
    const fs::path p = dir / ("stage" + std::to_string(stage) + ".json");
    std::error_code ec;
    if (!fs::exists(p, ec)) return json();
    return json::parse(text::ReadFile(p.string()));
  };
  const json s4 = read(4);
  if (!s4.is_null()) out.bundles = pipeline::BundlesFromJson(s4, read(5), read(6), aliases);
  return out;
}

std::shared_ptr<llm::ChatBackend> MakeBackend(const RunConfig& config) {
  if (!config.fixtures.empty()) {
    return std::make_shared<llm::FixtureBackend>(llm::FixtureBackend::Load(config.fixtures));
  }
  if (config.backend.endpoint.empty()) {
    throw Error(ErrorKind::kConfig, "no LLM backend: pass --fixtures or set llm.endpoint");
  }
  return std::make_shared<llm::HttpChatBackend>(config.backend);
}

llm::PromptLibrary Prompts(const RunConfig& config) {
  return config.prompts_path.empty() ? llm::PromptLibrary::Default()
                                     : llm::PromptLibrary::Load(config.prompts_path);
}

void WriteJson(const fs::path& path, const json& j) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  text::WriteFile(path.string(), j.dump(2) + "\n");
}

// ---- subcommands ----------------------------------------------------------

int Ingest(const RunConfig& config, std::ostream& out) {
  const auto docs = LoadInputs(config.inputs);
  const auto stats = corpus::ComputeStats(docs);
  json list = json::array();
  for (const auto& d : docs) {
    list.push_back({{"id", d.id},
                    {"title", d.title},
                    {"categories", d.categories},
                    {"paragraphs", d.paragraphs.size()},
                    {"chars", corpus::CountChars(d.cleaned_text)},
                    {"tokens", corpus::Tokenize(d.cleaned_text).size()}});
  }
  const json report = {{"documents", list},
                       {"stats",
                        {{"doc_count", stats.doc_count},
                         {"mean_chars", stats.mean_chars},
                         {"mean_tokens", stats.mean_tokens},
                         {"mean_unique_tokens", stats.mean_unique_tokens},
                         {"per_category", stats.per_category}}}};
  if (!config.out_dir.empty()) WriteJson(fs::path(config.out_dir) / "ingest.json", report);
  out << report.dump(2) << "\n";
  return kExitOk;
}

int Extract(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.out_dir.empty()) throw Error(ErrorKind::kConfig, "extract needs --out");
  const auto docs = LoadInputs(config.inputs);

  llm::BackendConfig backend_config = config.backend;
  backend_config.Validate();
  const llm::Gateway gateway(backend_config, MakeBackend(config));
  const llm::PromptLibrary prompts = Prompts(config);

  std::unique_ptr<ner::Recognizer> recognizer;
  if (!config.ner_endpoint.empty()) {
    recognizer = std::make_unique<ner::HttpRecognizer>(config.ner_endpoint);
  } else if (!config.gazetteer.empty()) {
    recognizer = std::make_unique<ner::GazetteerRecognizer>(
        ner::GazetteerRecognizer::Load(config.gazetteer));
  } else {
    throw Error(ErrorKind::kConfig, "no recognizer: set ner.gazetteer or ner.endpoint");
  }
  std::shared_ptr<linker::CachedSource> source = linker::MakeSource(config.linker);
  const linker::Linker linker(config.linker, source);
  std::optional<model::FeatureAliasTable> alias_storage;

  pipeline::Context ctx;
  ctx.gateway = &gateway;
  ctx.prompts = &prompts;
  ctx.recognizer = recognizer.get();
  ctx.linker = &linker;
  ctx.aliases = &Aliases(config, alias_storage);
  ctx.shots = backend_config.shot_count;
  ctx.entity_jobs = config.entity_jobs;

  pipeline::PipelineConfig pc;
  pc.out_dir = config.out_dir;
  pc.stage_from = config.stage_from;
  pc.stage_to = config.stage_to;
  pc.Validate();

  std::vector<std::optional<pipeline::RunReport>> reports(docs.size());
  std::vector<std::string> fatal(docs.size());
  ForEachDoc(docs.size(), config.jobs, [&](size_t i) {
    try {
      reports[i] = pipeline::RunPipeline(docs[i], ctx, pc).report;
    } catch (const std::exception& e) {
      fatal[i] = e.what();
    }
  });
  source->Save();

  int code = kExitOk;
  for (size_t i = 0; i < docs.size(); ++i) {
    if (!fatal[i].empty()) {
      err << docs[i].id << ": failed: " << fatal[i] << "\n";
      code = kExitPartial;
      continue;
    }
    for (const auto& f : reports[i]->failures) {
      err << docs[i].id << ": stage " << f.stage << (f.entity.empty() ? "" : " [" + f.entity + "]")
          << ": " << f.error << "\n";
    }
    if (!reports[i]->failures.empty()) code = kExitPartial;
    out << docs[i].id << ": stages " << config.stage_from << "-" << config.stage_to << " written to "
        << (fs::path(config.out_dir) / docs[i].id).string() << " ("
        << reports[i]->failures.size() << " failures)\n";
  }
  // Every document failing outright is fatal rather than partial.
  if (std::all_of(fatal.begin(), fatal.end(), [](const std::string& f) { return !f.empty(); })) {
    return kExitFatal;
  }
  return code;
}

int Map(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto dirs = ArtifactDirs(config.inputs);
  if (dirs.empty()) throw Error(ErrorKind::kConfig, "no stage artifacts found");
  std::optional<model::FeatureAliasTable> alias_storage;
  const auto& aliases = Aliases(config, alias_storage);
  int code = kExitOk;
  size_t written = 0;
  for (const auto& dir : dirs) {
    try {
      const PipelineOutput output = LoadOutput(dir, aliases);
      const rdf::Graph graph = rdfgen::MapOutput(output, config.map);
      const fs::path target =
          (config.out_dir.empty() ? dir : fs::path(config.out_dir)) / (output.doc_id + ".ttl");
      std::error_code ec;
      fs::create_directories(target.parent_path(), ec);
      text::WriteFile(target.string(), rdf::SerializeTurtleStar(graph));
      out << output.doc_id << ": " << graph.size() << " triples written to " << target.string() << "\n";
      ++written;
    } catch (const Error& e) {
      err << dir.string() << ": " << e.what() << "\n";
      code = kExitPartial;
    }
  }
  return written == 0 ? kExitFatal : code;
}

std::optional<rdf::Graph> GraphFor(const fs::path& dir, const PipelineOutput& output,
                                   const rdfgen::MapConfig& map) {
  const fs::path ttl = dir / (output.doc_id + ".ttl");
  std::error_code ec;
  if (fs::exists(ttl, ec)) return rdf::ParseTurtleStar(text::ReadFile(ttl.string()));
  if (output.items.empty() && output.bundles.empty()) return std::nullopt;
  return rdfgen::MapOutput(output, map);
}

// Category counts summed across documents, first-seen category order.
struct CountsAccumulator {
  std::vector<std::pair<std::string, eval::ConfusionCounts>> categories;
  std::vector<std::string> unmatched_pred, unmatched_gold;

  void Add(const eval::PrfReport& r) {
    for (const auto& c : r.categories) {
      auto it = std::find_if(categories.begin(), categories.end(),
                             [&](const auto& p) { return p.first == c.category; });
      if (it == categories.end()) {
        categories.emplace_back(c.category, c.counts);
      } else {
        it->second += c.counts;
      }
    }
    unmatched_pred.insert(unmatched_pred.end(), r.unmatched_pred.begin(), r.unmatched_pred.end());
    unmatched_gold.insert(unmatched_gold.end(), r.unmatched_gold.begin(), r.unmatched_gold.end());
  }
  eval::PrfReport Report() const {
    eval::PrfReport r = eval::Aggregate(categories);
    r.unmatched_pred = unmatched_pred;
    r.unmatched_gold = unmatched_gold;
    return r;
  }
};

int Evaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.gold.empty()) throw Error(ErrorKind::kConfig, "evaluate needs --gold");
  const auto pred_dirs = ArtifactDirs(config.inputs);
  const auto gold_dirs = ArtifactDirs({config.gold});
  std::map<std::string, fs::path> gold_by_name;
  for (const auto& g : gold_dirs) gold_by_name[g.filename().string()] = g;
  if (pred_dirs.empty()) throw Error(ErrorKind::kConfig, "no predicted artifacts found");

  const eval::EquivalenceList eq =
      config.equivalences.empty() ? eval::EquivalenceList() : eval::EquivalenceList::Load(config.equivalences);
  std::optional<model::FeatureAliasTable> alias_storage;
  const auto& aliases = Aliases(config, alias_storage);

  CountsAccumulator metadata, hypotheses;
  eval::ConfusionCounts entity_counts;
  double evidence_points = 0;
  eval::EvidenceReport evidence;
  std::vector<eval::GevalInput> geval_inputs;
  json per_doc = json::object();
  int code = kExitOk;

  for (const auto& pdir : pred_dirs) {
    // A single gold directory pairs with a single predicted one.
    fs::path gdir;
    if (auto it = gold_by_name.find(pdir.filename().string()); it != gold_by_name.end()) {
      gdir = it->second;
    } else if (gold_dirs.size() == 1 && pred_dirs.size() == 1) {
      gdir = gold_dirs.front();
    } else {
      err << pdir.string() << ": no gold artifacts with the same name\n";
      code = kExitPartial;
      continue;
    }
    const PipelineOutput pred = LoadOutput(pdir, aliases);
    const PipelineOutput gold = LoadOutput(gdir, aliases);
    const auto meta = eval::EvalMetadata(pred.items, gold.items, eq);
    const auto ents = eval::EvalEntities(pred.entities, gold.entities);
    const auto evid = eval::EvalEvidence(pred.bundles, gold.bundles, ents.matches, eq);
    const auto hyps = eval::EvalHypotheses(pred.bundles, gold.bundles, ents.matches, eq);
    metadata.Add(meta);
    hypotheses.Add(hyps);
    entity_counts += ents.counts;
    const size_t records = evid.paired + evid.unmatched_gold + evid.unmatched_pred;
    evidence_points += evid.mean_score * static_cast<double>(records);
    evidence.paired += evid.paired;
    evidence.unmatched_gold += evid.unmatched_gold;
    evidence.unmatched_pred += evid.unmatched_pred;
    per_doc[pred.doc_id] = {{"metadata", eval::ToJson(meta)},
                            {"entities", eval::ToJson(ents)},
                            {"evidence", eval::ToJson(evid)},
                            {"hypotheses", eval::ToJson(hyps)}};
    try {
      const auto pg = GraphFor(pdir, pred, config.map);
      const auto gg = GraphFor(gdir, gold, config.map);
      eval::GevalInput in{pred.doc_id, pg ? eval::Rehydrate(*pg) : std::vector<std::string>{},
                          gg ? eval::Rehydrate(*gg) : std::vector<std::string>{}};
      per_doc[pred.doc_id]["rehydration"] = {{"pred", in.pred}, {"gold", in.gold}};
      geval_inputs.push_back(std::move(in));
    } catch (const Error& e) {
      err << pred.doc_id << ": rehydration failed: " << e.what() << "\n";
      code = kExitPartial;
    }
  }

  const size_t records = evidence.paired + evidence.unmatched_gold + evidence.unmatched_pred;
  evidence.mean_score = records == 0 ? 0.0 : evidence_points / static_cast<double>(records);
  evidence.percentage = evidence.mean_score / 4.0;
  const eval::EntityReport entities{entity_counts, eval::Prf1(entity_counts), {}};
  const auto meta_report = metadata.Report();
  const auto hyp_report = hypotheses.Report();

  json report = {{"metadata", eval::ToJson(meta_report)},
                 {"entities", eval::ToJson(entities)},
                 {"evidence", eval::ToJson(evidence)},
                 {"hypotheses", eval::ToJson(hyp_report)},
                 {"documents", per_doc}};

  out << eval::FormatTable(meta_report, "Item metadata") << "\n";
  char line[160];
  std::snprintf(line, sizeof(line), "Entities: tp %zu fp %zu fn %zu  precision %.3f recall %.3f f1 %.3f\n\n",
                entity_counts.tp, entity_counts.fp, entity_counts.fn, entities.prf.precision,
                entities.prf.recall, entities.prf.f1);
  out << line;
  std::snprintf(line, sizeof(line), "Evidence: mean %.2f of 4 (%.1f%%) over %zu records\n\n",
                evidence.mean_score, 100 * evidence.percentage, records);
  out << line;
  out << eval::FormatTable(hyp_report, "Hypotheses and judgments") << "\n";

  const bool judge = !config.fixtures.empty() || !config.backend.endpoint.empty();
  if (judge && !geval_inputs.empty()) {
    const llm::Gateway gateway(config.backend, MakeBackend(config));
    const auto geval = eval::RunGeval(geval_inputs, gateway, Prompts(config));
    report["geval"] = eval::ToJson(geval);
    for (const auto& [name, s] : {std::pair{"correctness", geval.correctness_summary},
                                  std::pair{"representativeness", geval.representativeness_summary}}) {
      std::snprintf(line, sizeof(line), "G-Eval %-18s mean %.3f sd %.3f range %.3f-%.3f\n", name, s.mean,
                    s.std_dev, s.min, s.max);
      out << line;
    }
  }
  if (!config.out_dir.empty()) {
    WriteJson(fs::path(config.out_dir) / "evaluation.json", report);
  } else {
    out << report.dump(2) << "\n";
  }
  return code;
}

int Stats(const RunConfig& config, std::ostream& out) {
  if (config.inputs.empty()) throw Error(ErrorKind::kConfig, "stats needs at least one .ttl file");
  char line[256];
  std::snprintf(line, sizeof(line), "%-40s %10s %12s %10s\n", "graph", "triples", "acts", "cognizers");
  out << line;
  json report = json::array();
  for (const auto& path : config.inputs) {
    const auto stats = rdfgen::ComputeKgStats(rdf::ParseTurtleStar(text::ReadFile(path)));
    std::snprintf(line, sizeof(line), "%-40s %10zu %12zu %10zu\n",
                  fs::path(path).filename().string().c_str(), stats.triple_count,
                  stats.interpretation_acts, stats.cognizers);
    out << line;
    report.push_back({{"graph", path},
                      {"triples", stats.triple_count},
                      {"interpretation_acts", stats.interpretation_acts},
                      {"cognizers", stats.cognizers}});
  }
  if (!config.out_dir.empty()) WriteJson(fs::path(config.out_dir) / "stats.json", report);
  return kExitOk;
}

}  // namespace

std::map<std::string, std::string> ParseConfigText(std::string_view config_text) {
  std::map<std::string, std::string> values;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= config_text.size()) {
    size_t end = config_text.find('\n', pos);
    if (end == std::string_view::npos) end = config_text.size();
    std::string_view line = config_text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::Trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kConfig, "config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(text::Trim(line.substr(0, eq)));
    std::string value(text::Trim(line.substr(eq + 1)));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) throw Error(ErrorKind::kConfig, "config line " + std::to_string(line_no) + ": empty key");
    values[key] = value;
  }
  return values;
}

void ApplyConfig(const std::map<std::string, std::string>& values, RunConfig& c) {
  for (const auto& [key, v] : values) {
    if (key == "out") {
      c.out_dir = v;
    } else if (key == "fixtures") {
      c.fixtures = v;
    } else if (key == "gold") {
      c.gold = v;
    } else if (key == "jobs") {
      c.jobs = ToCount(key, v);
    } else if (key == "entity_jobs") {
      c.entity_jobs = ToCount(key, v);
    } else if (key == "stage_from") {
      c.stage_from = static_cast<int>(ToInt(key, v));
    } else if (key == "stage_to") {
      c.stage_to = static_cast<int>(ToInt(key, v));
    } else if (key == "llm.endpoint") {
      c.backend.endpoint = v;
    } else if (key == "llm.model") {
      c.backend.model = v;
    } else if (key == "llm.api_key_env") {
      c.backend.api_key_env = v;
    } else if (key == "llm.max_retries") {
      c.backend.max_retries = static_cast<int>(ToInt(key, v));
    } else if (key == "llm.timeout_seconds") {
      c.backend.timeout_seconds = static_cast<int>(ToInt(key, v));
    } else if (key == "llm.temperature") {
      c.backend.temperature = ToDouble(key, v);
    } else if (key == "llm.requests_per_minute") {
      c.backend.requests_per_minute = ToDouble(key, v);
    } else if (key == "llm.shots") {
      c.backend.shot_count = ToCount(key, v);
    } else if (key == "llm.prompts") {
      c.prompts_path = v;
    } else if (key == "ner.gazetteer") {
      c.gazetteer = v;
    } else if (key == "ner.endpoint") {
      c.ner_endpoint = v;
    } else if (key == "linker.threshold") {
      c.linker.threshold = ToDouble(key, v);
    } else if (key == "linker.weight_name") {
      c.linker.weights.name = ToDouble(key, v);
    } else if (key == "linker.weight_type") {
      c.linker.weights.type = ToDouble(key, v);
    } else if (key == "linker.weight_occupation") {
      c.linker.weights.occupation = ToDouble(key, v);
    } else if (key == "linker.language") {
      c.linker.language = v;
    } else if (key == "linker.search_limit") {
      c.linker.search_limit = ToCount(key, v);
    } else if (key == "linker.wikibase_url") {
      c.linker.wikibase_url = v;
    } else if (key == "linker.max_requests") {
      c.linker.max_requests = ToCount(key, v);
    } else if (key == "linker.fixtures") {
      c.linker.fixture_path = v;
    } else if (key == "linker.cache") {
      c.linker.cache_path = v;
    } else if (key == "map.lang") {
      c.map.lang = v;
    } else if (key == "map.location_predicate") {
      c.map.location_predicate = v;
    } else if (key == "feature_aliases") {
      c.feature_aliases = v;
    } else if (key == "equivalences") {
      c.equivalences = v;
    } else if (key.rfind("llm.api_key", 0) == 0 || key.find("secret") != std::string::npos ||
               key.find("token") != std::string::npos) {
      throw Error(ErrorKind::kConfig, "secrets are read from the environment, not from config key '" +
                                          key + "'");
    } else {
      throw Error(ErrorKind::kConfig, "unknown config key '" + key + "'");
    }
  }
}

int RunCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extracts authenticity debates from articles into an RDF-star knowledge graph.", "sebikg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sebikg 1.0");

  RunConfig config;
  std::string config_path;
  std::optional<std::string> out_dir, fixtures, gold, equivalences, gazetteer, wikidata;
  std::optional<size_t> jobs;
  std::optional<int> stage_from, stage_to;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value settings file")->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("inputs", config.inputs, "input files or directories");
  };
  auto* ingest = app.add_subcommand("ingest", "Load articles and report corpus statistics");
  common(ingest);
  auto* extract = app.add_subcommand("extract", "Run the extraction stages and write stage artifacts");
  common(extract);
  extract->add_option("--fixtures", fixtures, "canned LLM responses instead of a live endpoint");
  extract->add_option("--gazetteer", gazetteer, "gazetteer JSON for entity recognition");
  extract->add_option("--wikidata-fixtures", wikidata, "recorded Wikibase responses");
  extract->add_option("--jobs", jobs, "documents processed in parallel")->check(CLI::PositiveNumber);
  extract->add_option("--stage-from", stage_from, "first stage to run")->check(CLI::Range(1, 6));
  extract->add_option("--stage-to", stage_to, "last stage to run")->check(CLI::Range(1, 6));
  auto* map = app.add_subcommand("map", "Turn stage artifacts into Turtle-star graphs");
  common(map);
  auto* evaluate = app.add_subcommand("evaluate", "Score predicted artifacts against gold artifacts");
  common(evaluate);
  evaluate->add_option("--gold", gold, "gold artifact directory");
  evaluate->add_option("--equivalences", equivalences, "equivalence list JSON");
  evaluate->add_option("--fixtures", fixtures, "canned judge responses");
  auto* stats = app.add_subcommand("stats", "Count triples, interpretation acts and cognizers");
  common(stats);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    for (auto* sub : app.get_subcommands()) out << sub->help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitFatal;
  }

  try {
    if (!config_path.empty()) ApplyConfig(ParseConfigText(text::ReadFile(config_path)), config);
    if (out_dir) config.out_dir = *out_dir;
    if (fixtures) config.fixtures = *fixtures;
    if (gold) config.gold = *gold;
    if (equivalences) config.equivalences = *equivalences;
    if (gazetteer) config.gazetteer = *gazetteer;
    if (wikidata) config.linker.fixture_path = *wikidata;
    if (jobs) config.jobs = *jobs;
    if (stage_from) config.stage_from = *stage_from;
    if (stage_to) config.stage_to = *stage_to;

    if (ingest->parsed()) return Ingest(config, out);
    if (extract->parsed()) return Extract(config, out, err);
    if (map->parsed()) return Map(config, out, err);
    if (evaluate->parsed()) return Evaluate(config, out, err);
    if (stats->parsed()) return Stats(config, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitFatal;
}

}  // namespace sebikg::cli
