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


#ifndef SEBIKG_RDFGEN_HPP_
#define SEBIKG_RDFGEN_HPP_

#include <string>
#include <string_view>

#include "sebikg/output.hpp"
#include "sebikg/rdf.hpp"

namespace sebikg::rdfgen {

// Lowercase local name: parentheses, brackets, commas, periods, quotes and
// apostrophes are dropped, other separators collapse to one underscore,
// hyphens and digits survive. Common accented Latin letters are folded to
// ASCII; other characters are dropped. Idempotent. Throws Error{kEmptySlug}.
std::string Slugify(std::string_view label);

// "letter of credit" -> "LetterOfCredit"; empty when no ASCII word remains.
std::string ClassName(std::string_view item_type);

// DCMI type local name for an item type ("decree" -> "Text").
std::string DcmiTypeFor(std::string_view item_type);

struct MapConfig {
  std::string lang = "en";
  // Predicate for alleged and hypothesized locations.
  std::string location_predicate = "http://purl.org/dc/terms/coverage";
  rdf::PrefixMap prefixes = rdf::DefaultPrefixes();
};

// Local name of a cognizer node; collective cognizers get "collective_" in
// front of their slug.
std::string CognizerLocal(const linker::LinkedEntity& entity);
std::string ActLocal(std::string_view cognizer_local, std::string_view item_title);

// Items, their self statements, cognizers, interpretation acts and opinion
// claims.
rdf::Graph MapCore(const PipelineOutput& output, const MapConfig& config = {});

// Evidence and feature nodes of one bundle. `cognizer_local` names the
// bundle's cognizer node.
rdf::Graph MapEvidence(const OpinionBundle& bundle, std::string_view cognizer_local,
                       const MapConfig& config = {});

// Hypothesis claims of one bundle.
rdf::Graph MapHypotheses(const OpinionBundle& bundle, std::string_view cognizer_local,
                         const MapConfig& config = {});

// Union of MapCore and the per-bundle fragments. Throws Error{kMapping}.
rdf::Graph MapOutput(const PipelineOutput& output, const MapConfig& config = {});

struct KgStats {
  size_t triple_count = 0;
  size_t interpretation_acts = 0;
  size_t cognizers = 0;

  bool operator==(const KgStats&) const = default;
};

// Interpretation acts are hico:InterpretationAct nodes whose IRI lacks
// "self_statement"; cognizers are the distinct dct:Agent nodes those acts
// are attributed to.
KgStats ComputeKgStats(const rdf::Graph& graph);

}  // namespace sebikg::rdfgen

#endif  // SEBIKG_RDFGEN_HPP_
