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


#ifndef SEBIKG_EVALUATOR_HPP_
#define SEBIKG_EVALUATOR_HPP_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sebikg/linker.hpp"
#include "sebikg/llm_gateway.hpp"
#include "sebikg/model.hpp"
#include "sebikg/output.hpp"
#include "sebikg/rdf.hpp"

namespace sebikg::eval {

struct ConfusionCounts {
  size_t tp = 0;
  size_t fp = 0;
  size_t tn = 0;
  size_t fn = 0;

  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    return *this;
  }
  bool operator==(const ConfusionCounts&) const = default;
};

struct Prf {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// Zero denominators give zero.
Prf Prf1(const ConfusionCounts& c);

struct CategoryScore {
  std::string category;
  ConfusionCounts counts;
  Prf prf;
};

struct PrfReport {
  std::vector<CategoryScore> categories;  // fixed category order
  Prf micro;                              // over summed counts
  Prf macro;                              // mean of the per-category values
  // Alignment leftovers, reported rather than treated as errors.
  std::vector<std::string> unmatched_pred;
  std::vector<std::string> unmatched_gold;

  const CategoryScore& at(std::string_view category) const;
};

// Builds the per-category scores and both aggregates.
PrfReport Aggregate(std::vector<std::pair<std::string, ConfusionCounts>> categories);

// Pairs of strings declared equivalent per category, e.g. ("date", "4th c.",
// "4th century"). Lookups are symmetric and compare folded text.
class EquivalenceList {
 public:
  // {"version": 1, "entries": [{"category", "pred", "gold"}, ...]}
  static EquivalenceList FromJson(std::string_view json_text);
  static EquivalenceList Load(const std::string& path);

  void Add(std::string_view category, std::string_view a, std::string_view b);
  // True when the folded strings are equal or an entry links them.
  bool Equivalent(std::string_view category, std::string_view pred, std::string_view gold) const;
  size_t size() const { return entries_.size(); }

 private:
  std::set<std::tuple<std::string, std::string, std::string>> entries_;
};

// Item metadata over the categories title, type, creator, date and location.
// Items are aligned by slugged title. Per aligned pair: equal values are TP,
// two empty values TN, a value only on the predicted side FP, only on the gold
// side FN, and two differing values one FP plus one FN.
PrfReport EvalMetadata(std::span<const model::ItemRecord> pred,
                       std::span<const model::ItemRecord> gold, const EquivalenceList& eq);

// Cognizer key pairs (pred key, gold key) produced by entity matching.
using EntityMatches = std::vector<std::pair<std::string, std::string>>;

struct EntityReport {
  ConfusionCounts counts;
  Prf prf;
  EntityMatches matches;
};

// One-to-one matching: equal QIDs first, then any shared folded mention.
EntityReport EvalEntities(std::span<const linker::LinkedEntity> pred,
                          std::span<const linker::LinkedEntity> gold);

struct EvidenceScore {
  int points = 0;
  bool feature = false;
  bool evaluation = false;
  bool feature_class = false;
  bool polarity = false;
};

// Four points minus one per wrong dimension. Feature labels compare through
// the "feature" equivalence category.
EvidenceScore ScoreEvidence(const model::EvidenceRecord& pred, const model::EvidenceRecord& gold,
                            const EquivalenceList& eq);

struct EvidenceReport {
  double mean_score = 0;  // 0..4
  double percentage = 0;  // mean / 4
  size_t paired = 0;
  size_t unmatched_gold = 0;
  size_t unmatched_pred = 0;
};

// Evidence of matched cognizers only. Within each (cognizer, item) pair the
// records are paired greedily by descending score, ties by record order.
// Unpaired records on either side score 0.
EvidenceReport EvalEvidence(std::span<const OpinionBundle> pred, std::span<const OpinionBundle> gold,
                            const EntityMatches& matches, const EquivalenceList& eq);

// Per-kind scores for the authenticity type plus creator, date and location
// hypotheses of matched cognizers. Hypotheses match on kind, polarity and
// equivalent target text.
PrfReport EvalHypotheses(std::span<const OpinionBundle> pred, std::span<const OpinionBundle> gold,
                         const EntityMatches& matches, const EquivalenceList& eq);

// One statement block per interpretation act, acts in IRI order:
// "<agent> classified <item> as <opinion>[ in <date>][ at <location>]."
// followed by " Evidence: ..." and " Hypotheses: ..." when present.
// Throws Error{kRehydration} when an act lacks its agent or opinion claim.
std::vector<std::string> Rehydrate(const rdf::Graph& graph);

enum class Rubric { kCorrectness, kRepresentativeness };
std::string_view RubricName(Rubric rubric);

// Asks the judge for an integer 0..9 and returns k/9. With a fixture backend,
// identical statement lists score 1.0 without a call. A malformed judge reply
// throws Error{kJudgeFormat}.
double GevalJudge(std::span<const std::string> pred, std::span<const std::string> gold,
                  Rubric rubric, const llm::Gateway& gateway, const llm::PromptLibrary& prompts,
                  const std::string& doc_id);

struct ScoreSummary {
  size_t n = 0;
  double mean = 0;
  double std_dev = 0;  // population
  double min = 0;
  double max = 0;
};
ScoreSummary Summarize(std::span<const double> scores);

struct GevalReport {
  std::map<std::string, double> correctness;         // by doc id
  std::map<std::string, double> representativeness;  // by doc id
  ScoreSummary correctness_summary;
  ScoreSummary representativeness_summary;
};

struct GevalInput {
  std::string doc_id;
  std::vector<std::string> pred;
  std::vector<std::string> gold;
};

GevalReport RunGeval(std::span<const GevalInput> docs, const llm::Gateway& gateway,
                     const llm::PromptLibrary& prompts);

nlohmann::json ToJson(const PrfReport& report);
nlohmann::json ToJson(const EntityReport& report);
nlohmann::json ToJson(const EvidenceReport& report);
nlohmann::json ToJson(const GevalReport& report);

// Fixed-width text table of a report, for terminals.
std::string FormatTable(const PrfReport& report, std::string_view title);

}  // namespace sebikg::eval

#endif  // SEBIKG_EVALUATOR_HPP_
