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


#ifndef SEBIKG_MODEL_HPP_
#define SEBIKG_MODEL_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sebikg::model {

// What a cultural-heritage item claims about itself (alleged_*) and, for
// formal forgeries, what is known to be true (settled_*). Free text exactly
// as extracted.
struct ItemRecord {
  std::string item_title;
  std::optional<std::string> alleged_creator;
  std::optional<std::string> alleged_date;
  std::optional<std::string> alleged_location;
  std::optional<std::string> item_type;
  std::optional<std::string> item_subject;
  std::optional<std::string> settled_creator;
  std::optional<std::string> settled_date;
  std::optional<std::string> settled_location;

  bool operator==(const ItemRecord&) const = default;
};

enum class OpinionClass { kAuthentic, kForgery, kFormalForgery, kContentForgery, kNeutral };

enum class FeatureGroup { kIntrinsic, kExtrinsic, kProvenance };

enum class FeatureClass {
  kContent,
  kLanguage,
  kStyle,
  kOrthography,
  kHandwriting,
  kInk,
  kMaterialSupport,
  kPhysicalCharacteristics,
  kProvenance,
};

enum class EvaluationCriterion { kConsistency, kPresence, kCompleteness, kReliability, kVeridicality };

enum class Polarity { kPositive, kNegative, kNeutral };

enum class ConfidenceLevel { kHigh, kMedium, kLow };

enum class HypothesisKind { kAuthorship, kDating, kLocation, kMotivation };

enum class VocabularyKind { kFeature, kEvaluation, kPolarity, kConfidence, kHypothesis };

inline constexpr OpinionClass kAllOpinionClasses[] = {
    OpinionClass::kAuthentic, OpinionClass::kForgery, OpinionClass::kFormalForgery,
    OpinionClass::kContentForgery, OpinionClass::kNeutral};
inline constexpr FeatureClass kAllFeatureClasses[] = {
    FeatureClass::kContent,         FeatureClass::kLanguage,
    FeatureClass::kStyle,           FeatureClass::kOrthography,
    FeatureClass::kHandwriting,     FeatureClass::kInk,
    FeatureClass::kMaterialSupport, FeatureClass::kPhysicalCharacteristics,
    FeatureClass::kProvenance};
inline constexpr EvaluationCriterion kAllCriteria[] = {
    EvaluationCriterion::kConsistency, EvaluationCriterion::kPresence,
    EvaluationCriterion::kCompleteness, EvaluationCriterion::kReliability,
    EvaluationCriterion::kVeridicality};
inline constexpr Polarity kAllPolarities[] = {Polarity::kPositive, Polarity::kNegative,
                                              Polarity::kNeutral};
inline constexpr ConfidenceLevel kAllConfidenceLevels[] = {
    ConfidenceLevel::kHigh, ConfidenceLevel::kMedium, ConfidenceLevel::kLow};
inline constexpr HypothesisKind kAllHypothesisKinds[] = {
    HypothesisKind::kAuthorship, HypothesisKind::kDating, HypothesisKind::kLocation,
    HypothesisKind::kMotivation};

struct OpinionRecord {
  std::string cognizer_id;   // key of the LinkedEntity (its primary mention)
  std::string subject_item;  // ItemRecord::item_title
  OpinionClass opinion = OpinionClass::kNeutral;
  ConfidenceLevel confidence = ConfidenceLevel::kHigh;
  std::optional<std::string> date;
  std::optional<std::string> location;

  bool operator==(const OpinionRecord&) const = default;
};

struct EvidenceRecord {
  std::string evidence_text;
  std::string feature_label;
  FeatureClass feature_class = FeatureClass::kContent;
  EvaluationCriterion evaluation = EvaluationCriterion::kConsistency;
  Polarity polarity = Polarity::kNeutral;
  ConfidenceLevel confidence = ConfidenceLevel::kHigh;

  bool operator==(const EvidenceRecord&) const = default;
};

struct HypothesisRecord {
  HypothesisKind kind = HypothesisKind::kAuthorship;
  std::string target_text;
  std::optional<std::string> target_link;
  ConfidenceLevel confidence = ConfidenceLevel::kHigh;
  Polarity polarity = Polarity::kPositive;  // never kNeutral

  bool operator==(const HypothesisRecord&) const = default;
};

// Surface-string -> feature vocabulary term map used when a model emits a
// feature label outside the closed vocabulary.
class FeatureAliasTable {
 public:
  // The table shipped in data/feature_aliases.json.
  static const FeatureAliasTable& Default();
  static FeatureAliasTable FromJson(std::string_view json_text);
  static FeatureAliasTable Load(const std::string& path);

  std::optional<FeatureClass> Lookup(std::string_view surface) const;
  size_t size() const { return aliases_.size(); }
  const std::map<std::string, FeatureClass>& entries() const { return aliases_; }

 private:
  std::map<std::string, FeatureClass> aliases_;  // keyed by NormalizeLabel
};

using VocabularyTerm =
    std::variant<FeatureClass, EvaluationCriterion, Polarity, ConfidenceLevel, HypothesisKind>;

// Lowercases and drops whitespace and underscores: "Formal forgery",
// "formal_forgery" and "FormalForgery" all normalize to "formalforgery".
std::string NormalizeLabel(std::string_view s);

// All parsers throw Error{kUnknownLabel} for strings outside their set.
OpinionClass ParseOpinionLabel(std::string_view s);
FeatureClass ParseFeatureClass(std::string_view s,
                               const FeatureAliasTable& aliases = FeatureAliasTable::Default());
EvaluationCriterion ParseEvaluation(std::string_view s);
Polarity ParsePolarity(std::string_view s);
// Positive or negative only.
Polarity ParseHypothesisPolarity(std::string_view s);
ConfidenceLevel ParseConfidence(std::string_view s);
HypothesisKind ParseHypothesisKind(std::string_view s);
VocabularyTerm ParseVocabularyTerm(VocabularyKind kind, std::string_view s,
                                   const FeatureAliasTable& aliases = FeatureAliasTable::Default());

// Canonical renderings. Render(Parse(x)) is the canonical form of x.
std::string_view Render(OpinionClass v);        // "Formal forgery"
std::string_view OntologyClass(OpinionClass v); // "FormalForgery"
std::string_view Render(FeatureClass v);        // "material_support"
std::string_view Render(EvaluationCriterion v); // "presence"
std::string_view Render(Polarity v);            // "positive"
std::string_view Render(ConfidenceLevel v);     // "High"
std::string_view Render(HypothesisKind v);      // "dating"

FeatureGroup GroupOf(FeatureClass v);
std::string_view Render(FeatureGroup v);  // "intrinsic"

// High -> 1.0, Medium -> 0.66, Low -> 0.33.
double ConfidenceValue(ConfidenceLevel v);
// Lexical form used in RDF literals: "1.0", "0.66", "0.33".
std::string_view ConfidenceLexical(ConfidenceLevel v);
ConfidenceLevel ConfidenceFromValue(double value);

}  // namespace sebikg::model

#endif  // SEBIKG_MODEL_HPP_
