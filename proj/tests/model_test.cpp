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

#include <string>

#include "sebikg/error.hpp"
#include "sebikg/model.hpp"

namespace sebikg::model {
namespace {

TEST(ModelTest, OpinionLabelsAcceptSpellingVariants) {
  EXPECT_EQ(ParseOpinionLabel("Formal forgery"), OpinionClass::kFormalForgery);
  EXPECT_EQ(ParseOpinionLabel("formal_forgery"), OpinionClass::kFormalForgery);
  EXPECT_EQ(ParseOpinionLabel("FormalForgery"), OpinionClass::kFormalForgery);
  EXPECT_EQ(ParseOpinionLabel("forgery"), OpinionClass::kForgery);
  EXPECT_EQ(OntologyClass(OpinionClass::kContentForgery), "ContentForgery");
  EXPECT_EQ(Render(OpinionClass::kFormalForgery), "Formal forgery");
}

TEST(ModelTest, UnknownLabelsThrow) {
  try {
    ParseOpinionLabel("Fake");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownLabel);
  }
  EXPECT_THROW(ParseEvaluation("vibes"), Error);
  EXPECT_THROW(ParseConfidence("Very high"), Error);
  EXPECT_THROW(ParseHypothesisPolarity("neutral"), Error);
}

TEST(ModelTest, RenderOfParseIsCanonical) {
  for (auto v : kAllOpinionClasses) EXPECT_EQ(ParseOpinionLabel(Render(v)), v);
  for (auto v : kAllFeatureClasses) EXPECT_EQ(ParseFeatureClass(Render(v)), v);
  for (auto v : kAllCriteria) EXPECT_EQ(ParseEvaluation(Render(v)), v);
  for (auto v : kAllPolarities) EXPECT_EQ(ParsePolarity(Render(v)), v);
  for (auto v : kAllConfidenceLevels) EXPECT_EQ(ParseConfidence(Render(v)), v);
  for (auto v : kAllHypothesisKinds) EXPECT_EQ(ParseHypothesisKind(Render(v)), v);
  EXPECT_EQ(Render(ParseFeatureClass("Material Support")), "material_support");
}

TEST(ModelTest, FeatureGroups) {
  EXPECT_EQ(GroupOf(FeatureClass::kLanguage), FeatureGroup::kIntrinsic);
  EXPECT_EQ(GroupOf(FeatureClass::kInk), FeatureGroup::kExtrinsic);
  EXPECT_EQ(GroupOf(FeatureClass::kProvenance), FeatureGroup::kProvenance);
  EXPECT_EQ(Render(FeatureGroup::kIntrinsic), "intrinsic");
}

TEST(ModelTest, ConfidenceValuesRoundTrip) {
  EXPECT_DOUBLE_EQ(ConfidenceValue(ConfidenceLevel::kHigh), 1.0);
  EXPECT_DOUBLE_EQ(ConfidenceValue(ConfidenceLevel::kMedium), 0.66);
  EXPECT_DOUBLE_EQ(ConfidenceValue(ConfidenceLevel::kLow), 0.33);
  EXPECT_EQ(ConfidenceLexical(ConfidenceLevel::kMedium), "0.66");
  for (auto v : kAllConfidenceLevels) EXPECT_EQ(ConfidenceFromValue(ConfidenceValue(v)), v);
}

TEST(ModelTest, FeatureAliasesResolveOutOfVocabularyLabels) {
  const auto table = FeatureAliasTable::FromJson(R"({"philology": "language", "parchment": "material_support"})");
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(ParseFeatureClass("Philology", table), FeatureClass::kLanguage);
  EXPECT_EQ(ParseFeatureClass("parchment", table), FeatureClass::kMaterialSupport);
  EXPECT_THROW(ParseFeatureClass("weather", table), Error);
  EXPECT_GT(FeatureAliasTable::Default().size(), 0u);
}

TEST(ModelTest, VocabularyTermDispatchesOnKind) {
  EXPECT_EQ(std::get<Polarity>(ParseVocabularyTerm(VocabularyKind::kPolarity, "negative")),
            Polarity::kNegative);
  EXPECT_EQ(std::get<HypothesisKind>(ParseVocabularyTerm(VocabularyKind::kHypothesis, "dating")),
            HypothesisKind::kDating);
}

}  // namespace
}  // namespace sebikg::model
