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
#include <vector>

#include "sebikg/corpus.hpp"
#include "sebikg/error.hpp"
#include "sebikg/ner.hpp"
#include "test_support.hpp"

namespace sebikg::ner {
namespace {

using sebikg::testing::FixturePath;

GazetteerRecognizer Small() {
  return GazetteerRecognizer({{"Lorenzo Valla", EntityLabel::kPerson},
                              {"Valla", EntityLabel::kPerson},
                              {"Rome", EntityLabel::kLocation},
                              {"Pecocke", EntityLabel::kPerson},
                              {"Holy Roman Empire", EntityLabel::kOrganization},
                              {"Roman Empire", EntityLabel::kLocation}});
}

TEST(NerTest, LabelNamesRoundTrip) {
  for (auto l : kAllLabels) EXPECT_EQ(ParseLabel(LabelName(l)), l);
  EXPECT_THROW(ParseLabel("animal"), Error);
  EXPECT_EQ(AllLabels().size(), 4u);
}

TEST(NerTest, LongestMatchWinsOverlaps) {
  const std::string text = "Lorenzo Valla left Rome for the Holy Roman Empire.";
  const auto spans = Small().Recognize(text, AllLabels());
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(spans[0].surface, "Lorenzo Valla");
  EXPECT_EQ(spans[1].surface, "Rome");
  EXPECT_EQ(spans[2].surface, "Holy Roman Empire");
  EXPECT_EQ(spans[2].label, EntityLabel::kOrganization);
  for (const auto& s : spans) EXPECT_EQ(text.substr(s.start, s.end - s.start), s.surface);
}

TEST(NerTest, CaseRulesAndWordBoundaries) {
  const auto g = Small();
  // Short tokens are case-sensitive; long single tokens are not.
  EXPECT_TRUE(g.Recognize("rome fell", AllLabels()).empty());
  const auto loose = g.Recognize("as PECOCKE argued", AllLabels());
  ASSERT_EQ(loose.size(), 1u);
  EXPECT_EQ(loose[0].surface, "PECOCKE");
  // Multi-token names are case-sensitive, so only the single token matches.
  const auto lower = g.Recognize("lorenzo valla", AllLabels());
  ASSERT_EQ(lower.size(), 1u);
  EXPECT_EQ(lower[0].surface, "valla");
  EXPECT_TRUE(g.Recognize("Romeo and Vallata", AllLabels()).empty());
}

TEST(NerTest, LabelFilter) {
  const auto spans = Small().Recognize("Valla in Rome", {EntityLabel::kLocation});
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].surface, "Rome");
}

TEST(NerTest, ResolveOverlapsKeepsLongestThenEarliest) {
  std::vector<EntitySpan> spans = {{"bc", 1, 3, EntityLabel::kPerson},
                                   {"abc", 0, 3, EntityLabel::kPerson},
                                   {"cd", 2, 4, EntityLabel::kPerson},
                                   {"de", 3, 5, EntityLabel::kPerson}};
  const auto out = ResolveOverlaps(spans);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].surface, "abc");
  EXPECT_EQ(out[1].surface, "de");
}

TEST(NerTest, FixtureGazetteerSpansAreExactAndOrdered) {
  const auto g = GazetteerRecognizer::Load(FixturePath("gazetteer.json"));
  for (const auto& doc : corpus::LoadDirectory(FixturePath("corpus"))) {
    const auto spans = g.Recognize(doc.cleaned_text, AllLabels());
    EXPECT_FALSE(spans.empty()) << doc.id;
    for (size_t i = 0; i < spans.size(); ++i) {
      EXPECT_EQ(doc.cleaned_text.substr(spans[i].start, spans[i].end - spans[i].start), spans[i].surface);
      if (i > 0) EXPECT_LE(spans[i - 1].end, spans[i].start);
    }
  }
}

TEST(NerTest, ValidFixtureOffset) {
  const auto doc = corpus::LoadDocument(FixturePath("corpus/donation_of_constantine.txt"));
  const auto spans = GazetteerRecognizer::Load(FixturePath("gazetteer.json")).Recognize(doc.cleaned_text, AllLabels());
  bool found = false;
  for (const auto& s : spans) {
    if (s.surface == "Lorenzo Valla") {
      found = true;
      EXPECT_EQ(s.start, 605u);
      EXPECT_EQ(s.end, 618u);
      break;
    }
  }
  EXPECT_TRUE(found);
}

TEST(NerTest, BadGazetteerJson) {
  EXPECT_THROW(GazetteerRecognizer::FromJson(R"([{"surface": "X", "label": "planet"}])"), Error);
  EXPECT_THROW(GazetteerRecognizer::FromJson("{"), Error);
}

TEST(NerTest, UnreachableEndpointIsBackendError) {
  const HttpRecognizer r("http://127.0.0.1:9/ner", 1);
  try {
    r.Recognize("Valla", AllLabels());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBackend);
  }
}

}  // namespace
}  // namespace sebikg::ner
