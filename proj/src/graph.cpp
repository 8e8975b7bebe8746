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


#include <algorithm>

#include <json.hpp>

#include "embedded_data.hpp"
#include "sebikg/error.hpp"
#include "sebikg/rdf.hpp"

namespace sebikg::rdf {

namespace {

bool IsAbsoluteIri(std::string_view iri) {
  const size_t colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (size_t i = 0; i < colon; ++i) {
    const char c = iri[i];
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (i > 0 && ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.'));
    if (!ok) return false;
  }
  for (char c : iri) {
    if (static_cast<unsigned char>(c) <= 0x20) return false;
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        return false;
      default:
        break;
    }
  }
  return true;
}

void CheckTerm(const Term& t) {
  if (t.is_iri() && !IsAbsoluteIri(t.iri())) {
    throw Error(ErrorKind::kMapping, "not an absolute IRI: '" + t.iri() + "'");
  }
  if (t.is_literal()) {
    const auto& lit = t.literal();
    if (!lit.lang.empty() && !lit.datatype.empty()) {
      throw Error(ErrorKind::kMapping, "literal with both language tag and datatype");
    }
    if (!lit.datatype.empty() && !IsAbsoluteIri(lit.datatype)) {
      throw Error(ErrorKind::kMapping, "bad datatype IRI: '" + lit.datatype + "'");
    }
  }
}

void CheckTriple(const Triple& t) {
  if (t.subject.is_literal()) {
    throw Error(ErrorKind::kMapping, "literal in subject position");
  }
  if (!t.predicate.is_iri()) {
    throw Error(ErrorKind::kMapping, "predicate must be an IRI");
  }
  CheckTerm(t.subject);
  CheckTerm(t.predicate);
  CheckTerm(t.object);
  for (const Term* part : {&t.subject, &t.object}) {
    if (part->is_quoted()) {
      if (part->depth() > 1) {
        throw Error(ErrorKind::kMapping, "quoted triples may not be nested");
      }
      CheckTriple(part->quoted());
    }
  }
}

}  // namespace

Term Term::MakeIri(std::string iri) {
  Term t;
  t.value_ = rdf::Iri{std::move(iri)};
  return t;
}

Term Term::LangLiteral(std::string lexical, std::string lang) {
  Term t;
  t.value_ = Literal{std::move(lexical), std::move(lang), {}};
  return t;
}

Term Term::TypedLiteral(std::string lexical, std::string datatype) {
  if (datatype == XsdString()) return PlainLiteral(std::move(lexical));
  Term t;
  t.value_ = Literal{std::move(lexical), {}, std::move(datatype)};
  return t;
}

Term Term::PlainLiteral(std::string lexical) {
  Term t;
  t.value_ = Literal{std::move(lexical), {}, {}};
  return t;
}

Term Term::Quoted(Triple triple) {
  Term t;
  t.value_ = std::make_shared<const Triple>(std::move(triple));
  return t;
}

int Term::depth() const {
  if (!is_quoted()) return 0;
  const Triple& q = quoted();
  return 1 + std::max(q.subject.depth(), q.object.depth());
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (value_.index() != other.value_.index()) {
    return value_.index() <=> other.value_.index();
  }
  switch (value_.index()) {
    case 0: return std::get<0>(value_) <=> std::get<0>(other.value_);
    case 1: return std::get<1>(value_) <=> std::get<1>(other.value_);
    default: return quoted() <=> other.quoted();
  }
}

std::strong_ordering Triple::operator<=>(const Triple& other) const {
  if (auto c = subject <=> other.subject; c != 0) return c;
  if (auto c = predicate <=> other.predicate; c != 0) return c;
  return object <=> other.object;
}

std::string RdfType() { return std::string(ns::kRdf) + "type"; }
std::string XsdDecimal() { return std::string(ns::kXsd) + "decimal"; }
std::string XsdInteger() { return std::string(ns::kXsd) + "integer"; }
std::string XsdString() { return std::string(ns::kXsd) + "string"; }
std::string XsdBoolean() { return std::string(ns::kXsd) + "boolean"; }

const PrefixMap& DefaultPrefixes() {
  static const PrefixMap prefixes = [] {
    PrefixMap out;
    const auto doc = nlohmann::json::parse(embedded::kPrefixes);
    for (const auto& [prefix, iri] : doc.items()) out[prefix] = iri.get<std::string>();
    return out;
  }();
  return prefixes;
}

bool Graph::Add(Triple triple) {
  CheckTriple(triple);
  return triples_.insert(std::move(triple)).second;
}

void Graph::Merge(const Graph& other) {
  for (const auto& [p, iri] : other.prefixes_) prefixes_.emplace(p, iri);
  triples_.insert(other.triples_.begin(), other.triples_.end());
}

std::string Graph::Expand(std::string_view curie) const {
  const size_t colon = curie.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::kMapping, "not a prefixed name: " + std::string(curie));
  }
  auto it = prefixes_.find(std::string(curie.substr(0, colon)));
  if (it == prefixes_.end()) {
    throw Error(ErrorKind::kMapping, "unknown prefix in " + std::string(curie));
  }
  return it->second + std::string(curie.substr(colon + 1));
}

std::vector<Term> Graph::Objects(const Term& subject, const std::string& predicate) const {
  std::vector<Term> out;
  const Term p = Term::MakeIri(predicate);
  auto it = triples_.lower_bound(Triple{subject, p, Term::MakeIri("")});
  for (; it != triples_.end() && it->subject == subject && it->predicate == p; ++it) {
    out.push_back(it->object);
  }
  return out;
}

std::vector<Term> Graph::Subjects(const std::string& predicate, const Term& object) const {
  std::vector<Term> out;
  for (const auto& t : triples_) {
    if (t.object == object && t.predicate.iri() == predicate) out.push_back(t.subject);
  }
  return out;
}

}  // namespace sebikg::rdf
