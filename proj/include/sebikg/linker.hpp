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


#ifndef SEBIKG_LINKER_HPP_
#define SEBIKG_LINKER_HPP_

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sebikg/corpus.hpp"
#include "sebikg/decision.hpp"
#include "sebikg/ner.hpp"

namespace sebikg::linker {

struct EntityCluster {
  std::string primary_mention;            // longest mention
  std::vector<std::string> all_mentions;  // first-seen order
  ner::EntityLabel entity_type = ner::EntityLabel::kPerson;
  std::vector<size_t> paragraph_indices;  // sorted, unique

  bool operator==(const EntityCluster&) const = default;
};

struct WikidataCandidate {
  std::string qid;
  std::string label;
  std::vector<std::string> aliases;
  // "person", "location", "organization", "group", "other" or "unknown",
  // derived from the P31 (instance of) values.
  std::string instance_hint = "unknown";
  std::vector<std::string> occupations;  // P106 labels
  std::optional<int> birth_year;
  std::optional<int> death_year;

  bool operator==(const WikidataCandidate&) const = default;
};

struct LinkedEntity {
  EntityCluster cluster;
  std::optional<std::string> qid;
  std::optional<std::string> wikidata_label;
  std::vector<std::string> occupations;
  std::optional<int> birth_year;
  std::optional<int> death_year;
  double link_score = 0.0;
  // Impersonal or consensus cognizers ("most scholars") are never searched
  // and receive a reserved local URI.
  bool collective = false;

  const std::string& key() const { return cluster.primary_mention; }
  bool operator==(const LinkedEntity&) const = default;
};

struct ScoreWeights {
  double name = 0.5;
  double type = 0.2;
  double occupation = 0.3;
};

struct ScoreBreakdown {
  double name = 0;
  double type = 0;
  double occupation = 0;
  double total = 0;
};

struct LinkerConfig {
  ScoreWeights weights;
  double threshold = 0.65;
  // Case-insensitive list; defaults to data/scholarly_occupations.json.
  std::vector<std::string> scholarly_occupations;
  std::string language = "en";
  size_t search_limit = 5;
  // Live mode.
  std::string wikibase_url = "https://www.wikidata.org/w/api.php";
  int timeout_seconds = 30;
  size_t max_requests = 0;  // 0 = unlimited; exceeding it raises QuotaExceeded
  // Offline mode: file mapping mention -> {"search": ..., "entities": ...}.
  std::string fixture_path;
  // Persistent candidate cache (JSON map keyed by mention); empty = memory only.
  std::string cache_path;
};

std::vector<std::string> DefaultScholarlyOccupations();

// Merges decisions that share an identical (whitespace-normalized) mention
// and records every paragraph in which any cluster mention occurs as a whole
// word. Clusters are ordered by their first decision.
std::vector<EntityCluster> ClusterMentions(std::span<const CognizerDecision> decisions,
                                           std::span<const corpus::Paragraph> paragraphs);

// Sorted indices of paragraphs containing any mention as a whole word.
std::vector<size_t> ParagraphsMentioning(std::span<const std::string> mentions,
                                         std::span<const corpus::Paragraph> paragraphs);

// Unit-cost Levenshtein distance over code points.
size_t EditDistance(std::string_view a, std::string_view b);

// 1 - d(a, b) / max(|a|, |b|) on case-folded inputs; 1.0 for two empty strings.
double NameSimilarity(std::string_view a, std::string_view b);

bool TypeCompatible(ner::EntityLabel type, std::string_view instance_hint);

ScoreBreakdown ScoreCandidate(const EntityCluster& cluster, const WikidataCandidate& candidate,
                              const LinkerConfig& config);

// Parses wbsearchentities + wbgetentities responses into hydrated candidates
// (in search-hit order). `entities` may also carry the labels of occupation
// items referenced through P106.
std::vector<WikidataCandidate> ParseCandidates(const nlohmann::json& search,
                                               const nlohmann::json& entities,
                                               std::string_view language);

nlohmann::json CandidateToJson(const WikidataCandidate& c);
WikidataCandidate CandidateFromJson(const nlohmann::json& j);

class CandidateSource {
 public:
  virtual ~CandidateSource() = default;
  virtual std::vector<WikidataCandidate> Search(const std::string& mention) = 0;
};

// Queries the Wikibase API: wbsearchentities for hits, then wbgetentities
// for labels, aliases and claims, then once more for occupation labels.
class WikibaseSource : public CandidateSource {
 public:
  explicit WikibaseSource(LinkerConfig config);
  std::vector<WikidataCandidate> Search(const std::string& mention) override;

 private:
  nlohmann::json Call(const std::vector<std::pair<std::string, std::string>>& params);

  LinkerConfig config_;
  std::atomic<size_t> requests_{0};
};

// Replays recorded API responses; unknown mentions yield no candidates.
class FixtureSource : public CandidateSource {
 public:
  FixtureSource(nlohmann::json fixtures, std::string language = "en");
  static FixtureSource Load(const std::string& path, std::string language = "en");
  std::vector<WikidataCandidate> Search(const std::string& mention) override;

 private:
  nlohmann::json fixtures_;
  std::string language_;
};

// Mention-keyed cache in front of another source. Concurrent readers share
// the lock; duplicate in-flight misses may both reach the inner source and
// the first stored value wins. When a path is given the cache is loaded from
// and saved to that JSON file.
class CachedSource : public CandidateSource {
 public:
  CachedSource(std::unique_ptr<CandidateSource> inner, std::string cache_path = {});
  std::vector<WikidataCandidate> Search(const std::string& mention) override;

  // Number of lookups that reached the inner source.
  size_t inner_calls() const { return inner_calls_.load(); }
  void Save() const;

 private:
  std::unique_ptr<CandidateSource> inner_;
  std::string cache_path_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::vector<WikidataCandidate>> cache_;
  std::atomic<size_t> inner_calls_{0};
};

// Builds the source stack described by the config: fixture or live, always
// behind a cache.
std::unique_ptr<CachedSource> MakeSource(const LinkerConfig& config);

// True for impersonal or consensus mentions such as "most scholars".
bool IsCollectiveMention(std::string_view mention);

class Linker {
 public:
  Linker(LinkerConfig config, std::shared_ptr<CandidateSource> source);

  // Best candidate at or above the threshold, ties to the lower numeric QID.
  // An unlinked result is not an error; search errors propagate.
  LinkedEntity Link(const EntityCluster& cluster) const;

  // Ranks already-fetched candidates (used by Link and by tests).
  LinkedEntity Choose(const EntityCluster& cluster,
                      std::span<const WikidataCandidate> candidates) const;

  const LinkerConfig& config() const { return config_; }

 private:
  LinkerConfig config_;
  std::shared_ptr<CandidateSource> source_;
};

}  // namespace sebikg::linker

#endif  // SEBIKG_LINKER_HPP_
