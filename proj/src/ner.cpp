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


#include "sebikg/ner.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

#include "http_client.hpp"
#include "sebikg/error.hpp"
#include "sebikg/text.hpp"

namespace sebikg::ner {

using nlohmann::json;

LabelSet AllLabels() { return LabelSet(std::begin(kAllLabels), std::end(kAllLabels)); }

std::string_view LabelName(EntityLabel label) {
  switch (label) {
    case EntityLabel::kPerson: return "person";
    case EntityLabel::kOrganization: return "organization";
    case EntityLabel::kGroup: return "group";
    case EntityLabel::kLocation: return "location";
  }
  return {};
}

EntityLabel ParseLabel(std::string_view name) {
  const std::string key = text::ToLowerAscii(text::Trim(name));
  for (EntityLabel l : kAllLabels) {
    if (LabelName(l) == key) return l;
  }
  if (key == "org") return EntityLabel::kOrganization;
  if (key == "loc") return EntityLabel::kLocation;
  if (key == "per") return EntityLabel::kPerson;
  throw Error(ErrorKind::kUnknownLabel, "unknown entity label: '" + std::string(name) + "'");
}

std::vector<EntitySpan> ResolveOverlaps(std::vector<EntitySpan> spans) {
  std::stable_sort(spans.begin(), spans.end(), [](const EntitySpan& a, const EntitySpan& b) {
    const size_t la = a.end - a.start;
    const size_t lb = b.end - b.start;
    if (la != lb) return la > lb;
    return a.start < b.start;
  });
  std::vector<EntitySpan> kept;
  for (auto& s : spans) {
    const bool overlaps = std::any_of(kept.begin(), kept.end(), [&](const EntitySpan& k) {
      return s.start < k.end && k.start < s.end;
    });
    if (!overlaps) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end(),
            [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });
  return kept;
}

GazetteerRecognizer::GazetteerRecognizer(std::vector<GazetteerEntry> entries)
    : entries_(std::move(entries)) {
  std::erase_if(entries_, [](const GazetteerEntry& e) { return text::Trim(e.surface).empty(); });
}

GazetteerRecognizer GazetteerRecognizer::FromJson(std::string_view json_text) {
  std::vector<GazetteerEntry> entries;
  try {
    const auto doc = json::parse(json_text);
    for (const auto& item : doc) {
      entries.push_back({item.at("surface").get<std::string>(),
                         ParseLabel(item.at("label").get<std::string>())});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kConfig, std::string("malformed gazetteer: ") + e.what());
  }
  return GazetteerRecognizer(std::move(entries));
}

GazetteerRecognizer GazetteerRecognizer::Load(const std::string& path) {
  return FromJson(text::ReadFile(path));
}

std::vector<EntitySpan> GazetteerRecognizer::Recognize(std::string_view text,
                                                       const LabelSet& labels) const {
  std::vector<EntitySpan> candidates;
  if (text.empty()) return candidates;
  const std::string folded = text::ToLowerAscii(text);
  for (const auto& entry : entries_) {
    if (!labels.count(entry.label)) continue;
    const bool single_token = entry.surface.find(' ') == std::string::npos;
    const bool fold = single_token && entry.surface.size() >= 5;
    const std::string needle = fold ? text::ToLowerAscii(entry.surface) : entry.surface;
    const std::string_view hay = fold ? std::string_view(folded) : text;
    size_t pos = hay.find(needle);
    while (pos != std::string_view::npos) {
      const size_t end = pos + needle.size();
      const bool left_ok = pos == 0 || !text::IsWordChar(text[pos - 1]);
      const bool right_ok = end == text.size() || !text::IsWordChar(text[end]);
      if (left_ok && right_ok) {
        candidates.push_back({std::string(text.substr(pos, needle.size())), pos, end, entry.label});
      }
      pos = hay.find(needle, pos + 1);
    }
  }
  return ResolveOverlaps(std::move(candidates));
}

HttpRecognizer::HttpRecognizer(std::string endpoint, int timeout_seconds)
    : endpoint_(std::move(endpoint)), timeout_seconds_(timeout_seconds) {}

std::vector<EntitySpan> HttpRecognizer::Recognize(std::string_view text,
                                                  const LabelSet& labels) const {
  if (text.empty()) return {};
  json request;
  request["text"] = std::string(text);
  request["labels"] = json::array();
  for (EntityLabel l : labels) request["labels"].push_back(LabelName(l));

  http::Response res;
  try {
    res = http::Post(endpoint_, request.dump(), "application/json", {}, timeout_seconds_);
  } catch (const Error& e) {
    throw Error(ErrorKind::kBackend, e.what());
  }
  if (res.status != 200) {
    throw Error(ErrorKind::kBackend,
                "recognizer returned HTTP " + std::to_string(res.status) + ": " + res.body);
  }

  std::vector<EntitySpan> spans;
  try {
    const auto doc = json::parse(res.body);
    const auto& list = doc.is_array() ? doc : doc.at("spans");
    for (const auto& item : list) {
      EntitySpan span;
      span.start = item.at("start").get<size_t>();
      span.end = item.at("end").get<size_t>();
      span.label = ParseLabel(item.at("label").get<std::string>());
      if (span.start >= span.end || span.end > text.size()) {
        throw Error(ErrorKind::kBackend, "span offsets out of range");
      }
      span.surface = std::string(text.substr(span.start, span.end - span.start));
      if (item.contains("surface") && item["surface"].get<std::string>() != span.surface) {
        throw Error(ErrorKind::kBackend, "span surface does not match text at offsets");
      }
      if (labels.count(span.label)) spans.push_back(std::move(span));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kBackend) throw;
    throw Error(ErrorKind::kBackend, e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kBackend, std::string("malformed recognizer response: ") + e.what());
  }
  return ResolveOverlaps(std::move(spans));
}

}  // namespace sebikg::ner
