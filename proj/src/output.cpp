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


#include "sebikg/output.hpp"

#include <set>

#include "sebikg/error.hpp"
#include "sebikg/text.hpp"

namespace sebikg {

void CheckReferences(const PipelineOutput& output) {
  std::set<std::string> items;
  for (const auto& item : output.items) {
    if (text::Trim(item.item_title).empty()) {
      throw Error(ErrorKind::kMapping, output.doc_id + ": item with empty title");
    }
    items.insert(item.item_title);
  }
  std::set<std::string> cognizers;
  for (const auto& e : output.entities) cognizers.insert(e.key());
  for (const auto& b : output.bundles) {
    if (!cognizers.count(b.opinion.cognizer_id)) {
      throw Error(ErrorKind::kMapping,
                  output.doc_id + ": opinion by unknown cognizer '" + b.opinion.cognizer_id + "'");
    }
    if (!items.count(b.opinion.subject_item)) {
      throw Error(ErrorKind::kMapping,
                  output.doc_id + ": opinion on unknown item '" + b.opinion.subject_item + "'");
    }
  }
}

}  // namespace sebikg
