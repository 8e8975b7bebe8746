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


// Writes a synthetic ground-truth-shaped graph with exact triple, act and
// cognizer counts. Used to produce fixtures/gt_scale.ttl.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sebikg/error.hpp"
#include "sebikg/rdf.hpp"
#include "sebikg/rdfgen.hpp"
#include "sebikg/text.hpp"

namespace {

using namespace sebikg;

std::string Num(size_t i, const char* stem) { return std::string(stem) + " " + std::to_string(i); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate a ground-truth-scale Turtle-star fixture"};
  size_t triples = 4026, acts = 170, cognizers = 164, items = 45;
  std::string out;
  app.add_option("--triples", triples, "total triples");
  app.add_option("--acts", acts, "interpretation acts, self statements excluded");
  app.add_option("--cognizers", cognizers, "distinct agents behind the acts");
  app.add_option("--items", items, "items under debate");
  app.add_option("--out", out, "output file")->required();
  CLI11_PARSE(app, argc, argv);

  if (cognizers == 0 || items == 0 || acts < cognizers || acts > cognizers * items) {
    std::cerr << "need 0 < cognizers <= acts <= cognizers * items\n";
    return 2;
  }

  PipelineOutput output;
  output.doc_id = "gt_scale";
  for (size_t i = 0; i < items; ++i) {
    model::ItemRecord item;
    item.item_title = Num(i + 1, "Disputed item");
    item.item_type = i % 3 == 0 ? "manuscript" : (i % 3 == 1 ? "statue" : "letter");
    item.alleged_creator = Num(i + 1, "Purported maker");
    item.alleged_date = std::to_string(1000 + 7 * i);
    output.items.push_back(std::move(item));
  }
  for (size_t c = 0; c < cognizers; ++c) {
    linker::LinkedEntity e;
    e.cluster.primary_mention = Num(c + 1, "Scholar");
    e.cluster.all_mentions = {e.cluster.primary_mention};
    e.cluster.entity_type = ner::EntityLabel::kPerson;
    output.entities.push_back(std::move(e));
  }
  // Every cognizer holds one opinion; the first (acts - cognizers) hold a
  // second one on the next item.
  const auto opinions = model::kAllOpinionClasses;
  for (size_t a = 0; a < acts; ++a) {
    const size_t c = a < cognizers ? a : a - cognizers;
    const size_t item = (c + (a < cognizers ? 0 : 1)) % items;
    OpinionBundle b;
    b.opinion.cognizer_id = output.entities[c].key();
    b.opinion.subject_item = output.items[item].item_title;
    b.opinion.opinion = opinions[a % 5];
    b.opinion.confidence = model::kAllConfidenceLevels[a % 3];
    model::EvidenceRecord ev;
    ev.evidence_text = Num(a + 1, "observation");
    ev.feature_label = ev.evidence_text;
    ev.feature_class = model::kAllFeatureClasses[a % 9];
    ev.evaluation = model::kAllCriteria[a % 5];
    ev.polarity = model::kAllPolarities[a % 3];
    b.evidences.push_back(std::move(ev));
    if (a % 4 == 0) {
      model::HypothesisRecord h;
      h.kind = model::HypothesisKind::kDating;
      h.target_text = std::to_string(1100 + a) + "s";
      h.polarity = model::Polarity::kPositive;
      b.hypotheses.push_back(std::move(h));
    }
    output.bundles.push_back(std::move(b));
  }

  rdf::Graph graph;
  try {
    graph = rdfgen::MapOutput(output);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (graph.size() > triples) {
    std::cerr << "core graph already has " << graph.size() << " triples\n";
    return 2;
  }
  // Curator notes fill the remainder without touching acts or agents.
  const std::string comment = graph.Expand("rdfs:comment");
  for (size_t i = 0; graph.size() < triples; ++i) {
    graph.Add(rdf::Term::MakeIri(graph.Expand("kb:" + rdfgen::Slugify(output.items[i % items].item_title))),
              rdf::Term::MakeIri(comment), rdf::Term::LangLiteral(Num(i + 1, "curator note"), "en"));
  }
  text::WriteFile(out, rdf::SerializeTurtleStar(graph));
  const auto stats = rdfgen::ComputeKgStats(graph);
  std::cout << stats.triple_count << " triples, " << stats.interpretation_acts << " acts, "
            << stats.cognizers << " cognizers\n";
  return 0;
}
