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


#include "sebikg/model.hpp"

#include <cmath>

#include <json.hpp>

#include "embedded_data.hpp"
#include "sebikg/error.hpp"
#include "sebikg/text.hpp"

namespace sebikg::model {

namespace {

[[noreturn]] void Unknown(std::string_view what, std::string_view s) {
  throw Error(ErrorKind::kUnknownLabel,
              "unknown " + std::string(what) + " label: '" + std::string(s) + "'");
}

template <typename Enum, size_t N>
std::optional<Enum> MatchCanonical(const Enum (&values)[N], std::string_view key) {
  for (Enum v : values) {
    if (NormalizeLabel(Render(v)) == key) return v;
  }
  return std::nullopt;
}

}  // namespace

std::string NormalizeLabel(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (text::IsSpace(c) || c == '_') continue;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

std::string_view Render(OpinionClass v) {
  switch (v) {
    case OpinionClass::kAuthentic: return "Authentic";
    case OpinionClass::kForgery: return "Forgery";
    case OpinionClass::kFormalForgery: return "Formal forgery";
    case OpinionClass::kContentForgery: return "Content forgery";
    case OpinionClass::kNeutral: return "Neutral";
  }
  return {};
}

std::string_view OntologyClass(OpinionClass v) {
  switch (v) {
    case OpinionClass::kAuthentic: return "Authentic";
    case OpinionClass::kForgery: return "Forgery";
    case OpinionClass::kFormalForgery: return "FormalForgery";
    case OpinionClass::kContentForgery: return "ContentForgery";
    case OpinionClass::kNeutral: return "Neutral";
  }
  return {};
}

std::string_view Render(FeatureClass v) {
  switch (v) {
    case FeatureClass::kContent: return "content";
    case FeatureClass::kLanguage: return "language";
    case FeatureClass::kStyle: return "style";
    case FeatureClass::kOrthography: return "orthography";
    case FeatureClass::kHandwriting: return "handwriting";
    case FeatureClass::kInk: return "ink";
    case FeatureClass::kMaterialSupport: return "material_support";
    case FeatureClass::kPhysicalCharacteristics: return "physical_characteristics";
    case FeatureClass::kProvenance: return "provenance";
  }
  return {};
}

std::string_view Render(EvaluationCriterion v) {
  switch (v) {
    case EvaluationCriterion::kConsistency: return "consistency";
    case EvaluationCriterion::kPresence: return "presence";
    case EvaluationCriterion::kCompleteness: return "completeness";
    case EvaluationCriterion::kReliability: return "reliability";
    case EvaluationCriterion::kVeridicality: return "veridicality";
  }
  return {};
}

std::string_view Render(Polarity v) {
  switch (v) {
    case Polarity::kPositive: return "positive";
    case Polarity::kNegative: return "negative";
    case Polarity::kNeutral: return "neutral";
  }
  return {};
}

std::string_view Render(ConfidenceLevel v) {
  switch (v) {
    case ConfidenceLevel::kHigh: return "High";
    case ConfidenceLevel::kMedium: return "Medium";
    case ConfidenceLevel::kLow: return "Low";
  }
  return {};
}

std::string_view Render(HypothesisKind v) {
  switch (v) {
    case HypothesisKind::kAuthorship: return "authorship";
    case HypothesisKind::kDating: return "dating";
    case HypothesisKind::kLocation: return "location";
    case HypothesisKind::kMotivation: return "motivation";
  }
  return {};
}

std::string_view Render(FeatureGroup v) {
  switch (v) {
    case FeatureGroup::kIntrinsic: return "intrinsic";
    case FeatureGroup::kExtrinsic: return "extrinsic";
    case FeatureGroup::kProvenance: return "provenance";
  }
  return {};
}

FeatureGroup GroupOf(FeatureClass v) {
  switch (v) {
    case FeatureClass::kContent:
    case FeatureClass::kLanguage:
    case FeatureClass::kStyle:
    case FeatureClass::kOrthography:
      return FeatureGroup::kIntrinsic;
    case FeatureClass::kHandwriting:
    case FeatureClass::kInk:
    case FeatureClass::kMaterialSupport:
    case FeatureClass::kPhysicalCharacteristics:
      return FeatureGroup::kExtrinsic;
    case FeatureClass::kProvenance:
      return FeatureGroup::kProvenance;
  }
  return FeatureGroup::kIntrinsic;
}

OpinionClass ParseOpinionLabel(std::string_view s) {
  if (auto v = MatchCanonical(kAllOpinionClasses, NormalizeLabel(s))) return *v;
  Unknown("opinion", s);
}

FeatureClass ParseFeatureClass(std::string_view s, const FeatureAliasTable& aliases) {
  const std::string key = NormalizeLabel(s);
  if (auto v = MatchCanonical(kAllFeatureClasses, key)) return *v;
  if (auto v = aliases.Lookup(s)) return *v;
  Unknown("feature", s);
}

EvaluationCriterion ParseEvaluation(std::string_view s) {
  if (auto v = MatchCanonical(kAllCriteria, NormalizeLabel(s))) return *v;
  Unknown("evaluation", s);
}

Polarity ParsePolarity(std::string_view s) {
  if (auto v = MatchCanonical(kAllPolarities, NormalizeLabel(s))) return *v;
  Unknown("polarity", s);
}

Polarity ParseHypothesisPolarity(std::string_view s) {
  const Polarity p = ParsePolarity(s);
  if (p == Polarity::kNeutral) Unknown("hypothesis polarity", s);
  return p;
}

ConfidenceLevel ParseConfidence(std::string_view s) {
  if (auto v = MatchCanonical(kAllConfidenceLevels, NormalizeLabel(s))) return *v;
  Unknown("confidence", s);
}

HypothesisKind ParseHypothesisKind(std::string_view s) {
  const std::string key = NormalizeLabel(s);
  if (auto v = MatchCanonical(kAllHypothesisKinds, key)) return *v;
  // Field names used by extraction responses.
  if (key == "creator" || key == "author" || key == "creatorhypothesis") {
    return HypothesisKind::kAuthorship;
  }
  if (key == "date" || key == "creationdate" || key == "datinghypothesis") {
    return HypothesisKind::kDating;
  }
  if (key == "creationlocation" || key == "place" || key == "locationhypothesis") {
    return HypothesisKind::kLocation;
  }
  if (key == "reason" || key == "intention" || key == "purpose" ||
      key == "reasonhypothesis") {
    return HypothesisKind::kMotivation;
  }
  Unknown("hypothesis kind", s);
}

VocabularyTerm ParseVocabularyTerm(VocabularyKind kind, std::string_view s,
                                   const FeatureAliasTable& aliases) {
  switch (kind) {
    case VocabularyKind::kFeature: return ParseFeatureClass(s, aliases);
    case VocabularyKind::kEvaluation: return ParseEvaluation(s);
    case VocabularyKind::kPolarity: return ParsePolarity(s);
    case VocabularyKind::kConfidence: return ParseConfidence(s);
    case VocabularyKind::kHypothesis: return ParseHypothesisKind(s);
  }
  Unknown("vocabulary", s);
}

double ConfidenceValue(ConfidenceLevel v) {
  switch (v) {
    case ConfidenceLevel::kHigh: return 1.0;
    case ConfidenceLevel::kMedium: return 0.66;
    case ConfidenceLevel::kLow: return 0.33;
  }
  return 1.0;
}

std::string_view ConfidenceLexical(ConfidenceLevel v) {
  switch (v) {
    case ConfidenceLevel::kHigh: return "1.0";
    case ConfidenceLevel::kMedium: return "0.66";
    case ConfidenceLevel::kLow: return "0.33";
  }
  return "1.0";
}

ConfidenceLevel ConfidenceFromValue(double value) {
  ConfidenceLevel best = ConfidenceLevel::kHigh;
  double best_dist = 2.0;
  for (ConfidenceLevel v : kAllConfidenceLevels) {
    const double d = std::abs(ConfidenceValue(v) - value);
    if (d < best_dist) {
      best_dist = d;
      best = v;
    }
  }
  return best;
}

const FeatureAliasTable& FeatureAliasTable::Default() {
  static const FeatureAliasTable table = FromJson(embedded::kFeatureAliases);
  return table;
}

FeatureAliasTable FeatureAliasTable::FromJson(std::string_view json_text) {
  FeatureAliasTable table;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kConfig, std::string("feature alias table: ") + e.what());
  }
  const auto& aliases = doc.contains("aliases") ? doc.at("aliases") : doc;
  if (!aliases.is_object()) {
    throw Error(ErrorKind::kConfig, "feature alias table must map strings to terms");
  }
  for (const auto& [surface, term] : aliases.items()) {
    if (!term.is_string()) {
      throw Error(ErrorKind::kConfig, "alias '" + surface + "' has a non-string term");
    }
    const std::string key = NormalizeLabel(term.get<std::string>());
    auto cls = MatchCanonical(kAllFeatureClasses, key);
    if (!cls) {
      throw Error(ErrorKind::kConfig,
                  "alias '" + surface + "' targets unknown term '" + term.get<std::string>() + "'");
    }
    table.aliases_[NormalizeLabel(surface)] = *cls;
  }
  return table;
}

FeatureAliasTable FeatureAliasTable::Load(const std::string& path) {
  return FromJson(text::ReadFile(path));
}

std::optional<FeatureClass> FeatureAliasTable::Lookup(std::string_view surface) const {
  auto it = aliases_.find(NormalizeLabel(surface));
  if (it == aliases_.end()) return std::nullopt;
  return it->second;
}

}  // namespace sebikg::model
