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


#ifndef SEBIKG_TESTS_TEST_SUPPORT_HPP_
#define SEBIKG_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sebikg/cli.hpp"
#include "sebikg/rdf.hpp"
#include "sebikg/rdfgen.hpp"

namespace sebikg::testing {

inline std::string FixturePath(const std::string& relative) {
  return std::string(SEBIKG_TEST_FIXTURE_DIR) + "/" + relative;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("sebikg_test_" + std::to_string(rd()) + "_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

struct CommandResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CommandResult Run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CommandResult r;
  r.code = cli::RunCommand(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// extract + map over the fixture corpus in fixture mode.
inline CommandResult RunFixtureExtract(const std::string& out_dir,
                                       const std::string& input = FixturePath("corpus")) {
  return Run({"extract", "--fixtures", FixturePath("llm_fixtures.json"), "--gazetteer",
              FixturePath("gazetteer.json"), "--wikidata-fixtures",
              FixturePath("wikidata_fixtures.json"), "--out", out_dir, input});
}

inline CommandResult RunFixtureMap(const std::string& out_dir) { return Run({"map", out_dir}); }

// Random graphs for serializer round trips. Covers prefixed and full IRIs,
// every literal form and quoted triples in subject and object position.
class GraphGenerator {
 public:
  explicit GraphGenerator(uint32_t seed) : rng_(seed) {}

  rdf::Graph Make(size_t triples) {
    rdf::Graph g(rdf::DefaultPrefixes());
    size_t guard = 0;
    while (g.size() < triples && guard++ < triples * 20) {
      rdf::Triple t = Plain();
      if (Chance(5)) t = {rdf::Term::Quoted(Plain()), Predicate(), Object()};
      if (Chance(5)) t = {Iri(), Predicate(), rdf::Term::Quoted(Plain())};
      g.Add(std::move(t));
    }
    return g;
  }

  std::string RandomString(size_t max_len) {
    static const std::vector<std::string> kPieces = {
        "a", "Z", "7", " ", "  ", "_", "-", ".", ",", "'", "\"", "(", ")", "[", "]", "\t",
        "\n", "\\", "/", ":", "é", "ü", "ß", "Æ", "ç", "ñ", "ō", "中", "€", "&", "?", "!"};
    std::string s;
    const size_t n = Uniform(max_len);
    for (size_t i = 0; i < n; ++i) s += kPieces[Uniform(kPieces.size() - 1)];
    return s;
  }

  size_t Uniform(size_t max) { return std::uniform_int_distribution<size_t>(0, max)(rng_); }
  bool Chance(size_t one_in) { return Uniform(one_in - 1) == 0; }

 private:
  rdf::Triple Plain() { return {Iri(), Predicate(), Object()}; }

  rdf::Term Iri() {
    static const std::vector<std::string> kBases = {
        "https://w3id.org/sebi/kb/", "https://w3id.org/sebi#", "http://www.wikidata.org/entity/",
        "http://example.org/other/"};
    static const std::vector<std::string> kLocals = {"lorenzo_valla", "1439-1440", "x", "Q214115",
                                                     "item_7", "a-b_c", "Forgery"};
    return rdf::Term::MakeIri(kBases[Uniform(kBases.size() - 1)] + kLocals[Uniform(kLocals.size() - 1)] +
                              (Chance(2) ? std::to_string(Uniform(50)) : ""));
  }

  rdf::Term Predicate() {
    static const std::vector<std::string> kPreds = {
        "http://www.w3.org/1999/02/22-rdf-syntax-ns#type", "http://purl.org/dc/terms/title",
        "http://www.w3.org/ns/prov#wasDerivedFrom", "https://w3id.org/sebi#assess",
        "http://example.org/other/p"};
    return rdf::Term::MakeIri(kPreds[Uniform(kPreds.size() - 1)]);
  }

  rdf::Term Object() {
    switch (Uniform(6)) {
      case 0:
        return rdf::Term::LangLiteral(RandomString(12), Chance(2) ? "en" : "it");
      case 1:
        return rdf::Term::PlainLiteral(RandomString(12));
      case 2:
        return rdf::Term::TypedLiteral(std::to_string(Uniform(2000)), rdf::XsdInteger());
      case 3: {
        static const char* kDecimals[] = {"1.0", "0.66", "0.33", "12.5"};
        return rdf::Term::TypedLiteral(kDecimals[Uniform(3)], rdf::XsdDecimal());
      }
      case 4:
        return rdf::Term::TypedLiteral(Chance(2) ? "true" : "false", rdf::XsdBoolean());
      case 5:
        return rdf::Term::TypedLiteral("doc_" + std::to_string(Uniform(9)),
                                       "http://www.w3.org/2001/XMLSchema#anyURI");
      default:
        return Iri();
    }
  }

  std::mt19937 rng_;
};

// Full-scan counterpart of rdfgen::ComputeKgStats that looks at every triple
// without the graph's index helpers.
inline rdfgen::KgStats NaiveKgStats(const rdf::Graph& graph) {
  const auto& p = rdf::DefaultPrefixes();
  const std::string type = std::string(rdf::ns::kRdf) + "type";
  const std::string act_class = p.at("hico") + "InterpretationAct";
  const std::string attributed = p.at("prov") + "wasAttributedTo";
  const std::string agent = p.at("dct") + "Agent";

  std::set<std::string> acts, agents, cognizers;
  for (const auto& t : graph.triples()) {
    if (!t.subject.is_iri() || !t.object.is_iri() || t.predicate.iri() != type) continue;
    if (t.object.iri() == act_class && t.subject.iri().find("self_statement") == std::string::npos) {
      acts.insert(t.subject.iri());
    }
    if (t.object.iri() == agent) agents.insert(t.subject.iri());
  }
  for (const auto& t : graph.triples()) {
    if (t.subject.is_iri() && t.predicate.iri() == attributed && t.object.is_iri() &&
        acts.count(t.subject.iri()) && agents.count(t.object.iri())) {
      cognizers.insert(t.object.iri());
    }
  }
  return {graph.size(), acts.size(), cognizers.size()};
}

}  // namespace sebikg::testing

#endif  // SEBIKG_TESTS_TEST_SUPPORT_HPP_
