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

#include <filesystem>
#include <string>
#include <vector>

#include "sebikg/corpus.hpp"
#include "sebikg/error.hpp"
#include "sebikg/text.hpp"
#include "test_support.hpp"

namespace sebikg {
namespace {

using testing::FixturePath;
using testing::TempDir;

TEST(TextTest, FoldForMatchLowercasesAndCollapsesSpace) {
  EXPECT_EQ(text::FoldForMatch("  Lorenzo \t VALLA \n"), "lorenzo valla");
  EXPECT_EQ(text::FoldForMatch(""), "");
  EXPECT_EQ(text::NormalizeWhitespace("a  b\n\nc "), "a b c");
  EXPECT_EQ(text::Trim(" \t x y \n"), "x y");
}

TEST(TextTest, Utf8Validation) {
  EXPECT_TRUE(text::IsValidUtf8("Jiří Frel, €"));
  EXPECT_FALSE(text::IsValidUtf8("\xc3"));
  EXPECT_FALSE(text::IsValidUtf8("\xff\xfe"));
  EXPECT_FALSE(text::IsValidUtf8("\xc0\xaf"));  // overlong
}

TEST(CorpusTest, CleanMarkupRemovesReferenceNoise) {
  EXPECT_EQ(corpus::CleanMarkup("Valla wrote[21] this.[citation needed]"), "Valla wrote this.");
  EXPECT_EQ(corpus::CleanMarkup("A {{Infobox|x={{nested}}}}B"), "A B");
  EXPECT_EQ(corpus::CleanMarkup("== History ==\nText[note 3]."), "History\nText.");
  // Ordinary brackets stay.
  EXPECT_EQ(corpus::CleanMarkup("the [sic] form [1440]"), "the [sic] form ");
}

TEST(CorpusTest, CleanMarkupIsIdempotentAndNeverLengthens) {
  testing::GraphGenerator gen(7);
  const std::vector<std::string> pieces = {"[1]", "[", "]", "{{", "}}", "==", "\n", "\r\n", "x", " ",
                                           "[citation needed]", "[a]", "= T =", "é"};
  for (int i = 0; i < 500; ++i) {
    std::string raw;
    const size_t n = gen.Uniform(30);
    for (size_t k = 0; k < n; ++k) raw += pieces[gen.Uniform(pieces.size() - 1)];
    const std::string once = corpus::CleanMarkup(raw);
    EXPECT_LE(once.size(), raw.size());
    EXPECT_EQ(corpus::CleanMarkup(once), once) << raw;
  }
}

TEST(CorpusTest, ParagraphOffsetsPointIntoCleanedText) {
  const auto doc = corpus::MakeDocument("d", "First line\nstill first.\n\n\n  Second.  \n\nThird[2].\n");
  ASSERT_EQ(doc.paragraphs.size(), 3u);
  for (size_t i = 0; i < doc.paragraphs.size(); ++i) {
    const auto& p = doc.paragraphs[i];
    EXPECT_EQ(p.index, i);
    EXPECT_EQ(doc.cleaned_text.substr(p.char_start, p.char_end - p.char_start), p.text);
  }
  EXPECT_EQ(doc.paragraphs[1].text, "Second.");
  EXPECT_EQ(doc.paragraphs[2].text, "Third.");
}

TEST(CorpusTest, TokenizeAndCountChars) {
  EXPECT_EQ(corpus::Tokenize("\"Hello,\" said (Valla)."),
            (std::vector<std::string>{"Hello", "said", "Valla"}));
  EXPECT_EQ(corpus::CountChars("Jiří"), 4u);
}

TEST(CorpusTest, LoadsFixtureWithSidecar) {
  const auto doc = corpus::LoadDocument(FixturePath("corpus/getty_kouros.txt"));
  EXPECT_EQ(doc.id, "getty_kouros");
  EXPECT_EQ(doc.title, "Getty kouros");
  EXPECT_EQ(doc.categories, (std::vector<std::string>{"Artwork", "Disputed"}));
  EXPECT_EQ(doc.paragraphs.size(), 5u);
}

TEST(CorpusTest, LoadDirectorySkipsSidecarsAndSortsById) {
  const auto docs = corpus::LoadDirectory(FixturePath("corpus"));
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].id, "donation_of_constantine");
  EXPECT_EQ(docs[1].id, "getty_kouros");
}

TEST(CorpusTest, ErrorsCarryTheirKind) {
  TempDir dir;
  const auto bad = (dir.path() / "bad.txt").string();
  text::WriteFile(bad, "\xff\xfe broken");
  try {
    corpus::LoadDocument(bad);
    FAIL() << "expected an encoding error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEncoding);
  }
  const auto good = (dir.path() / "ok.txt").string();
  text::WriteFile(good, "text");
  text::WriteFile((dir.path() / "ok.meta.json").string(), "{not json");
  try {
    corpus::LoadDocument(good);
    FAIL() << "expected a sidecar error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSidecar);
  }
  try {
    corpus::LoadDocument((dir.path() / "missing.txt").string());
    FAIL() << "expected an io error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

TEST(CorpusTest, StatsAverageOverDocuments) {
  std::vector<corpus::Document> docs = {corpus::MakeDocument("a", "one two two", "A", {"X"}),
                                        corpus::MakeDocument("b", "three", "B", {"X", "Y"})};
  const auto stats = corpus::ComputeStats(docs);
  EXPECT_EQ(stats.doc_count, 2u);
  EXPECT_DOUBLE_EQ(stats.mean_chars, (11.0 + 5.0) / 2);
  EXPECT_DOUBLE_EQ(stats.mean_tokens, 2.0);
  EXPECT_DOUBLE_EQ(stats.mean_unique_tokens, 1.5);
  EXPECT_EQ(stats.per_category.at("X"), 2u);
  EXPECT_EQ(stats.per_category.at("Y"), 1u);
  EXPECT_THROW(corpus::ComputeStats({}), Error);
}

}  // namespace
}  // namespace sebikg
