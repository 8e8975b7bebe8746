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


#ifndef SEBIKG_CORPUS_HPP_
#define SEBIKG_CORPUS_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sebikg::corpus {

// A blank-line delimited block of cleaned text. Offsets are byte offsets into
// Document::cleaned_text with text == cleaned_text.substr(char_start,
// char_end - char_start).
struct Paragraph {
  size_t index = 0;
  std::string text;
  size_t char_start = 0;
  size_t char_end = 0;

  bool operator==(const Paragraph&) const = default;
};

struct Document {
  std::string id;
  std::string title;
  std::vector<std::string> categories;
  std::string raw_text;
  std::string cleaned_text;
  std::vector<Paragraph> paragraphs;
};

struct CorpusStats {
  size_t doc_count = 0;
  double mean_chars = 0;
  double mean_tokens = 0;
  double mean_unique_tokens = 0;
  std::map<std::string, size_t> per_category;
};

// Reads a UTF-8 article and its optional `<stem>.meta.json` sidecar, then
// cleans and segments it. Throws Error{kIo, kEncoding, kSidecar}.
Document LoadDocument(const std::string& path);

// Loads every `*.txt` file of a directory (sidecars excluded), ordered by id.
std::vector<Document> LoadDirectory(const std::string& dir);

// Builds a Document directly from text; used by tests and the pipeline when
// documents do not come from disk.
Document MakeDocument(std::string id, std::string raw_text,
                      std::string title = {},
                      std::vector<std::string> categories = {});

// Removes citation markers ("[21]", "[citation needed]"), template braces
// and heading markup. Total, idempotent and never lengthens its input.
std::string CleanMarkup(std::string_view raw);

std::vector<Paragraph> SegmentParagraphs(std::string_view text);

// Whitespace tokens with leading/trailing punctuation stripped.
std::vector<std::string> Tokenize(std::string_view text);

// Number of UTF-8 code points.
size_t CountChars(std::string_view text);

// Throws Error{kEmptyCorpus} on an empty input.
CorpusStats ComputeStats(std::span<const Document> docs);

}  // namespace sebikg::corpus

#endif  // SEBIKG_CORPUS_HPP_
