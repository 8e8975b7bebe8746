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


#include "sebikg/corpus.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <set>

#include <json.hpp>

#include "sebikg/error.hpp"
#include "sebikg/text.hpp"

namespace sebikg::corpus {

namespace fs = std::filesystem;

namespace {

constexpr std::array<std::string_view, 8> kEditorialTags = {
    "citation needed", "clarification needed", "dubious", "who?",
    "when?",           "by whom?",             "which?",  "according to whom?",
};

bool IsDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
           return c >= '0' && c <= '9';
         });
}

// Contents of a bracket pair that wiki exports leave behind as reference
// markers: "[21]", "[a]", "[note 3]", "[citation needed]".
bool IsCitationBody(std::string_view body) {
  if (IsDigits(body)) return true;
  if (body.size() <= 2 && std::all_of(body.begin(), body.end(), [](char c) {
        return c >= 'a' && c <= 'z';
      })) {
    return !body.empty();
  }
  const std::string lower = text::ToLowerAscii(body);
  for (std::string_view prefix : {"note ", "nb "}) {
    if (lower.starts_with(prefix) &&
        IsDigits(std::string_view(lower).substr(prefix.size()))) {
      return true;
    }
  }
  return std::find(kEditorialTags.begin(), kEditorialTags.end(), lower) !=
         kEditorialTags.end();
}

std::string NormalizeNewlines(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < s.size() && s[i + 1] == '\n') ++i;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

std::string StripTemplates(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 2, "{{") == 0) {
      int depth = 0;
      size_t j = i;
      while (j < s.size()) {
        if (s.compare(j, 2, "{{") == 0) {
          ++depth;
          j += 2;
        } else if (s.compare(j, 2, "}}") == 0) {
          --depth;
          j += 2;
          if (depth == 0) break;
        } else {
          ++j;
        }
      }
      if (depth == 0) {
        i = j;
        continue;
      }
      // Unbalanced: keep the rest verbatim.
      out.append(s.substr(i));
      break;
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

std::string StripCitations(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '[') {
      const size_t close = s.find_first_of("]\n[", i + 1);
      if (close != std::string_view::npos && s[close] == ']' &&
          IsCitationBody(s.substr(i + 1, close - i - 1))) {
        i = close + 1;
        continue;
      }
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

std::string StripHeadings(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find('\n', start);
    const bool last = end == std::string_view::npos;
    if (last) end = s.size();
    const std::string_view line = s.substr(start, end - start);
    const std::string_view trimmed = text::Trim(line);
    size_t lead = 0;
    while (lead < trimmed.size() && trimmed[lead] == '=') ++lead;
    size_t trail = 0;
    while (trail < trimmed.size() - lead &&
           trimmed[trimmed.size() - 1 - trail] == '=') {
      ++trail;
    }
    if (lead >= 2 && lead == trail && trimmed.size() > 2 * lead) {
      out.append(text::Trim(trimmed.substr(lead, trimmed.size() - 2 * lead)));
    } else {
      out.append(line);
    }
    if (last) break;
    out.push_back('\n');
    start = end + 1;
  }
  return out;
}

std::string CleanOnce(std::string_view raw) {
  return StripHeadings(StripCitations(StripTemplates(NormalizeNewlines(raw))));
}

bool IsPunct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && !text::IsWordChar(c) && !text::IsSpace(c);
}

bool IsBlankLine(std::string_view line) { return text::Trim(line).empty(); }

}  // namespace

std::string CleanMarkup(std::string_view raw) {
  // Each rule only deletes bytes, so iterating to a fixed point terminates
  // and makes the function idempotent.
  std::string current = CleanOnce(raw);
  for (;;) {
    std::string next = CleanOnce(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<Paragraph> SegmentParagraphs(std::string_view text) {
  std::vector<Paragraph> out;
  size_t block_start = std::string_view::npos;
  size_t block_end = 0;
  auto flush = [&] {
    if (block_start == std::string_view::npos) return;
    std::string_view block = text.substr(block_start, block_end - block_start);
    size_t b = 0;
    while (b < block.size() && text::IsSpace(block[b])) ++b;
    size_t e = block.size();
    while (e > b && text::IsSpace(block[e - 1])) --e;
    if (e > b) {
      Paragraph p;
      p.index = out.size();
      p.char_start = block_start + b;
      p.char_end = block_start + e;
      p.text = std::string(text.substr(p.char_start, p.char_end - p.char_start));
      out.push_back(std::move(p));
    }
    block_start = std::string_view::npos;
  };

  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    const size_t line_end = nl == std::string_view::npos ? text.size() : nl;
    const std::string_view line = text.substr(pos, line_end - pos);
    if (IsBlankLine(line)) {
      flush();
    } else {
      if (block_start == std::string_view::npos) block_start = pos;
      block_end = line_end;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  flush();
  return out;
}

Document MakeDocument(std::string id, std::string raw_text, std::string title,
                      std::vector<std::string> categories) {
  Document doc;
  doc.id = std::move(id);
  if (title.empty()) {
    title = doc.id;
    std::replace(title.begin(), title.end(), '_', ' ');
  }
  doc.title = std::move(title);
  doc.categories = std::move(categories);
  doc.raw_text = std::move(raw_text);
  doc.cleaned_text = CleanMarkup(doc.raw_text);
  doc.paragraphs = SegmentParagraphs(doc.cleaned_text);
  return doc;
}

Document LoadDocument(const std::string& path) {
  const fs::path p(path);
  std::error_code ec;
  if (!fs::is_regular_file(p, ec)) {
    throw Error(ErrorKind::kIo, "not a readable file: " + path);
  }
  std::string raw = text::ReadFile(path);
  if (!text::IsValidUtf8(raw)) {
    throw Error(ErrorKind::kEncoding, "invalid UTF-8 in " + path);
  }

  std::string title;
  std::vector<std::string> categories;
  const fs::path sidecar = p.parent_path() / (p.stem().string() + ".meta.json");
  if (fs::exists(sidecar, ec)) {
    try {
      const auto meta = nlohmann::json::parse(text::ReadFile(sidecar.string()));
      if (!meta.is_object()) throw std::runtime_error("sidecar is not an object");
      if (meta.contains("title")) title = meta.at("title").get<std::string>();
      if (meta.contains("categories")) {
        categories = meta.at("categories").get<std::vector<std::string>>();
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorKind::kSidecar,
                  "malformed sidecar " + sidecar.string() + ": " + e.what());
    }
  }
  return MakeDocument(p.stem().string(), std::move(raw), std::move(title),
                      std::move(categories));
}

std::vector<Document> LoadDirectory(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::kIo, "not a directory: " + dir);
  }
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<Document> docs;
  docs.reserve(paths.size());
  for (const auto& path : paths) docs.push_back(LoadDocument(path));
  return docs;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& raw : text::SplitWhitespace(text)) {
    size_t b = 0;
    size_t e = raw.size();
    while (b < e && IsPunct(raw[b])) ++b;
    while (e > b && IsPunct(raw[e - 1])) --e;
    if (e > b) out.push_back(raw.substr(b, e - b));
  }
  return out;
}

size_t CountChars(std::string_view text) {
  return static_cast<size_t>(std::count_if(text.begin(), text.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

CorpusStats ComputeStats(std::span<const Document> docs) {
  if (docs.empty()) throw Error(ErrorKind::kEmptyCorpus, "no documents");
  CorpusStats stats;
  stats.doc_count = docs.size();
  double chars = 0, tokens = 0, unique = 0;
  for (const auto& doc : docs) {
    chars += static_cast<double>(CountChars(doc.cleaned_text));
    const auto toks = Tokenize(doc.cleaned_text);
    tokens += static_cast<double>(toks.size());
    std::set<std::string> seen;
    for (const auto& t : toks) seen.insert(text::ToLowerAscii(t));
    unique += static_cast<double>(seen.size());
    for (const auto& c : doc.categories) ++stats.per_category[c];
  }
  const auto n = static_cast<double>(docs.size());
  stats.mean_chars = chars / n;
  stats.mean_tokens = tokens / n;
  stats.mean_unique_tokens = unique / n;
  return stats;
}

}  // namespace sebikg::corpus
