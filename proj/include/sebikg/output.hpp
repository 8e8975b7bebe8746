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


#ifndef SEBIKG_OUTPUT_HPP_
#define SEBIKG_OUTPUT_HPP_

#include <string>
#include <vector>

#include "sebikg/linker.hpp"
#include "sebikg/model.hpp"

namespace sebikg {

// One cognizer's opinion on one item with the evidence and hypotheses that
// back it. Child records implicitly share the opinion's cognizer and item.
struct OpinionBundle {
  model::OpinionRecord opinion;
  std::vector<model::EvidenceRecord> evidences;
  std::vector<model::HypothesisRecord> hypotheses;

  bool operator==(const OpinionBundle&) const = default;
};

struct PipelineOutput {
  std::string doc_id;
  std::vector<model::ItemRecord> items;
  std::vector<linker::LinkedEntity> entities;
  std::vector<OpinionBundle> bundles;
  std::vector<std::string> stage_artifacts;  // paths, in stage order

  bool operator==(const PipelineOutput&) const = default;
};

// Throws Error{kMapping} when a bundle references an unknown cognizer or
// item, or when an item title is empty.
void CheckReferences(const PipelineOutput& output);

}  // namespace sebikg

#endif  // SEBIKG_OUTPUT_HPP_
