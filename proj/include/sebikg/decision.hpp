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


#ifndef SEBIKG_DECISION_HPP_
#define SEBIKG_DECISION_HPP_

#include <string>
#include <vector>

#include "sebikg/ner.hpp"

namespace sebikg {

// Outcome of asking the model whether a recognized entity expresses an
// opinion on one of the document's items. `mentions` always contains
// entity.surface.
struct CognizerDecision {
  ner::EntitySpan entity;
  bool is_cognizer = false;
  bool is_subject = false;
  std::vector<std::string> mentions;

  bool operator==(const CognizerDecision&) const = default;
};

}  // namespace sebikg

#endif  // SEBIKG_DECISION_HPP_
