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


#ifndef SEBIKG_RDF_HPP_
#define SEBIKG_RDF_HPP_

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sebikg::rdf {

struct Triple;

struct Iri {
  std::string value;
  auto operator<=>(const Iri&) const = default;
};

// A literal carries either a language tag or a datatype IRI, never both. A
// literal with neither is an xsd:string.
struct Literal {
  std::string lexical;
  std::string lang;
  std::string datatype;
  auto operator<=>(const Literal&) const = default;
};

class Term {
 public:
  Term() : value_(rdf::Iri{}) {}
  static Term MakeIri(std::string iri);
  static Term LangLiteral(std::string lexical, std::string lang);
  static Term TypedLiteral(std::string lexical, std::string datatype);
  static Term PlainLiteral(std::string lexical);
  static Term Quoted(Triple triple);

  bool is_iri() const { return value_.index() == 0; }
  bool is_literal() const { return value_.index() == 1; }
  bool is_quoted() const { return value_.index() == 2; }

  const std::string& iri() const { return std::get<rdf::Iri>(value_).value; }
  const Literal& literal() const { return std::get<Literal>(value_); }
  const Triple& quoted() const { return *std::get<std::shared_ptr<const Triple>>(value_); }

  // Nesting depth of quoted triples: 0 for IRIs and literals.
  int depth() const;

  std::strong_ordering operator<=>(const Term& other) const;
  bool operator==(const Term& other) const { return (*this <=> other) == 0; }

 private:
  std::variant<rdf::Iri, Literal, std::shared_ptr<const Triple>> value_;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  std::strong_ordering operator<=>(const Triple& other) const;
  bool operator==(const Triple& other) const { return (*this <=> other) == 0; }
};

// prefix -> namespace IRI
using PrefixMap = std::map<std::string, std::string>;

// The prefixes shipped in data/prefixes.json.
const PrefixMap& DefaultPrefixes();

// Well-known namespace IRIs.
namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
}  // namespace ns

std::string RdfType();
std::string XsdDecimal();
std::string XsdInteger();
std::string XsdString();
std::string XsdBoolean();

// Set of triples plus the prefix map used for serialization. Add() enforces
// the term-position invariants and rejects quoted triples nested deeper than
// one level.
class Graph {
 public:
  Graph() = default;
  explicit Graph(PrefixMap prefixes) : prefixes_(std::move(prefixes)) {}

  // Returns false when the triple was already present.
  bool Add(Triple triple);
  bool Add(Term s, Term p, Term o) { return Add(Triple{std::move(s), std::move(p), std::move(o)}); }
  void Merge(const Graph& other);

  bool Contains(const Triple& t) const { return triples_.count(t) > 0; }
  size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  const std::set<Triple>& triples() const { return triples_; }
  const PrefixMap& prefixes() const { return prefixes_; }
  void SetPrefix(std::string prefix, std::string iri) { prefixes_[std::move(prefix)] = std::move(iri); }

  // Expands "prefix:local" with this graph's prefixes. Throws Error{kMapping}
  // for an unknown prefix.
  std::string Expand(std::string_view curie) const;

  // All objects of (subject, predicate).
  std::vector<Term> Objects(const Term& subject, const std::string& predicate) const;
  // All subjects of (predicate, object).
  std::vector<Term> Subjects(const std::string& predicate, const Term& object) const;

  bool operator==(const Graph& other) const { return triples_ == other.triples_; }

 private:
  std::set<Triple> triples_;
  PrefixMap prefixes_;
};

// Deterministic Turtle-star: sorted prefix block, subjects in lexicographic
// order of their rendering, grouped predicate-object lists, `a` for
// rdf:type, quoted triples as `<< s p o >>`.
std::string SerializeTurtleStar(const Graph& graph);

// Parses the Turtle-star subset emitted by SerializeTurtleStar: @prefix/PREFIX
// directives, prefixed names, `a`, predicate-object and object lists, quoted
// triples, language-tagged, typed, numeric and boolean literals, comments.
// Throws ParseError with a line/column.
Graph ParseTurtleStar(std::string_view text);

// Renders one term the way the serializer does (used for sorting and
// diagnostics).
std::string RenderTerm(const Term& term, const PrefixMap& prefixes);

}  // namespace sebikg::rdf

#endif  // SEBIKG_RDF_HPP_
