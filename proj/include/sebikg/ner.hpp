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


#ifndef SEBIKG_NER_HPP_
#define SEBIKG_NER_HPP_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sebikg::ner {

enum class EntityLabel { kPerson, kOrganization, kGroup, kLocation };

inline constexpr EntityLabel kAllLabels[] = {EntityLabel::kPerson, EntityLabel::kOrganization,
                                             EntityLabel::kGroup, EntityLabel::kLocation};

using LabelSet = std::set<EntityLabel>;

LabelSet AllLabels();

std::string_view LabelName(EntityLabel label);
// Throws Error{kUnknownLabel}.
EntityLabel ParseLabel(std::string_view name);

// A recognized mention. Offsets are UTF-8 byte offsets into the cleaned text
// and satisfy text.substr(start, end - start) == surface.
struct EntitySpan {
  std::string surface;
  size_t start = 0;
  size_t end = 0;
  EntityLabel label = EntityLabel::kPerson;

  bool operator==(const EntitySpan&) const = default;
};

class Recognizer {
 public:
  virtual ~Recognizer() = default;
  // Spans sorted by start, non-overlapping, restricted to `labels`.
  virtual std::vector<EntitySpan> Recognize(std::string_view text,
                                            const LabelSet& labels) const = 0;
};

struct GazetteerEntry {
  std::string surface;
  EntityLabel label = EntityLabel::kPerson;
};

// Dictionary matcher. Multi-token names and tokens shorter than five bytes
// match case-sensitively; longer single tokens match case-insensitively.
// Matches must sit on word boundaries. Overlaps resolve to the longest match,
// ties to the earliest start.
class GazetteerRecognizer : public Recognizer {
 public:
  explicit GazetteerRecognizer(std::vector<GazetteerEntry> entries);

  // JSON list of {"surface": ..., "label": ...}.
  static GazetteerRecognizer FromJson(std::string_view json_text);
  static GazetteerRecognizer Load(const std::string& path);

  std::vector<EntitySpan> Recognize(std::string_view text, const LabelSet& labels) const override;

  const std::vector<GazetteerEntry>& entries() const { return entries_; }

 private:
  std::vector<GazetteerEntry> entries_;
};

// Adapter for an external recognizer service. POSTs {"text", "labels"} to
// the endpoint and expects {"spans": [{"start", "end", "label"}...]} (a bare
// list is accepted too). Throws Error{kBackend} on transport failures or
// malformed spans.
class HttpRecognizer : public Recognizer {
 public:
  explicit HttpRecognizer(std::string endpoint, int timeout_seconds = 30);

  std::vector<EntitySpan> Recognize(std::string_view text, const LabelSet& labels) const override;

 private:
  std::string endpoint_;
  int timeout_seconds_;
};

// Sorts by start and drops overlapping spans (longest first, then earliest).
std::vector<EntitySpan> ResolveOverlaps(std::vector<EntitySpan> spans);

}  // namespace sebikg::ner

#endif  // SEBIKG_NER_HPP_
