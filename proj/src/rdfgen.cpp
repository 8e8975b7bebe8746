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


#include "sebikg/rdfgen.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include <json.hpp>

#include "embedded_data.hpp"
#include "sebikg/error.hpp"
#include "sebikg/text.hpp"

namespace sebikg::rdfgen {

using rdf::Graph;
using rdf::Term;

namespace {

// ASCII spelling of U+00C0..U+00FF.
constexpr const char* kLatin1Fold[64] = {
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i",  "i",
    "d", "n", "o", "o", "o", "o", "o",  "",  "o", "u", "u", "u", "u", "y", "th", "ss",
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i",  "i",
    "d", "n", "o", "o", "o", "o", "o",  "",  "o", "u", "u", "u", "u", "y", "th", "y"};

// ASCII spelling of U+0100..U+017F, as inclusive ranges.
struct FoldRange {
  char32_t first;
  char32_t last;
  const char* ascii;
};
constexpr FoldRange kLatinExtAFold[] = {
    {0x100, 0x105, "a"}, {0x106, 0x10D, "c"}, {0x10E, 0x111, "d"}, {0x112, 0x11B, "e"},
    {0x11C, 0x123, "g"}, {0x124, 0x127, "h"}, {0x128, 0x131, "i"}, {0x132, 0x133, "ij"},
    {0x134, 0x135, "j"}, {0x136, 0x138, "k"}, {0x139, 0x142, "l"}, {0x143, 0x14B, "n"},
    {0x14C, 0x151, "o"}, {0x152, 0x153, "oe"}, {0x154, 0x159, "r"}, {0x15A, 0x161, "s"},
    {0x162, 0x167, "t"}, {0x168, 0x173, "u"}, {0x174, 0x175, "w"}, {0x176, 0x178, "y"},
    {0x179, 0x17E, "z"}, {0x17F, 0x17F, "s"}};

// Characters deleted outright rather than turned into a separator.
bool IsDropped(char32_t c) {
  switch (c) {
    case '(': case ')': case '[': case ']': case '{': case '}': case ',': case '.':
    case '"': case '\'': case '`': case '!': case '?':
    case 0x2018: case 0x2019: case 0x201C: case 0x201D: case 0x00AB: case 0x00BB:
      return true;
    default:
      return false;
  }
}

// Returns the code point at s[i] and advances i; invalid bytes map to U+FFFD.
char32_t NextCodePoint(std::string_view s, size_t& i) {
  const auto c = static_cast<unsigned char>(s[i]);
  size_t extra = 0;
  char32_t cp = c;
  if (c >= 0xF0) {
    extra = 3;
    cp = c & 0x07;
  } else if (c >= 0xE0) {
    extra = 2;
    cp = c & 0x0F;
  } else if (c >= 0xC0) {
    extra = 1;
    cp = c & 0x1F;
  } else if (c >= 0x80) {
    ++i;
    return 0xFFFD;
  }
  ++i;
  for (size_t k = 0; k < extra; ++k, ++i) {
    if (i >= s.size()) return 0xFFFD;
    cp = (cp << 6) | (static_cast<unsigned char>(s[i]) & 0x3F);
  }
  return cp;
}

std::string FoldLetter(char32_t c) {
  if (c >= 0xC0 && c <= 0xFF) return kLatin1Fold[c - 0xC0];
  for (const auto& r : kLatinExtAFold) {
    if (c >= r.first && c <= r.last) return r.ascii;
  }
  return {};
}

const nlohmann::json& ItemTypeTable() {
  static const nlohmann::json table = nlohmann::json::parse(embedded::kItemTypeLookup);
  return table;
}

// IRI builder bound to a prefix map.
class Vocab {
 public:
  explicit Vocab(const rdf::PrefixMap& prefixes) : prefixes_(prefixes) {}

  Term I(std::string_view prefix, std::string_view local) const {
    auto it = prefixes_.find(std::string(prefix));
    if (it == prefixes_.end()) {
      throw Error(ErrorKind::kMapping, "prefix map lacks '" + std::string(prefix) + "'");
    }
    return Term::MakeIri(it->second + std::string(local));
  }
  Term Kb(std::string_view local) const { return I("kb", local); }
  Term Type() const { return Term::MakeIri(rdf::RdfType()); }

 private:
  const rdf::PrefixMap& prefixes_;
};

Term Lang(std::string text, const MapConfig& config) {
  return Term::LangLiteral(std::move(text), config.lang);
}

Term Confidence(model::ConfidenceLevel level) {
  return Term::TypedLiteral(std::string(model::ConfidenceLexical(level)), rdf::XsdDecimal());
}

// Slug with the offending record named in the error.
std::string SlugOf(std::string_view label, std::string_view what) {
  try {
    return Slugify(label);
  } catch (const Error& e) {
    throw Error(ErrorKind::kMapping,
                std::string(what) + " '" + std::string(label) + "' has no usable local name");
  }
}

// Minted node with a label and an optional class.
Term LabeledNode(Graph& g, const Vocab& v, std::string_view label, std::string_view what,
                 const std::optional<Term>& cls, const MapConfig& config) {
  const Term node = v.Kb(SlugOf(label, what));
  g.Add(node, v.I("rdfs", "label"), Lang(std::string(text::Trim(label)), config));
  if (cls) g.Add(node, v.Type(), *cls);
  return node;
}

bool Present(const std::optional<std::string>& s) {
  return s.has_value() && !text::Trim(*s).empty();
}

Term ItemNode(const Vocab& v, std::string_view title) { return v.Kb(SlugOf(title, "item")); }

void MapItem(Graph& g, const Vocab& v, const model::ItemRecord& item, const MapConfig& config) {
  const Term node = ItemNode(v, item.item_title);
  const std::string title(text::Trim(item.item_title));
  g.Add(node, v.I("dct", "title"), Lang(title, config));
  g.Add(node, v.I("rdfs", "label"), Lang(title, config));

  const std::string type_text = item.item_type ? std::string(text::Trim(*item.item_type)) : "";
  const std::string cls = ClassName(type_text);
  const Term dcmi = v.I("dcmitype", DcmiTypeFor(type_text));
  if (cls.empty()) {
    g.Add(node, v.Type(), dcmi);
  } else {
    const Term type_node = v.I("sebi", cls);
    g.Add(node, v.Type(), type_node);
    g.Add(type_node, v.I("rdfs", "subClassOf"), dcmi);
    g.Add(type_node, v.I("rdfs", "label"), Lang(text::ToLowerAscii(type_text), config));
  }
  if (Present(item.item_subject)) {
    g.Add(node, v.I("dct", "subject"), Lang(std::string(text::Trim(*item.item_subject)), config));
  }

  const Term self = v.Kb(SlugOf(item.item_title, "item") + "_self_statement");
  bool any_claim = false;
  auto claim = [&](const Term& predicate, const Term& target) {
    g.Add(Term::Quoted({node, predicate, target}), v.I("prov", "wasDerivedFrom"), self);
    any_claim = true;
  };
  if (Present(item.alleged_creator)) {
    claim(v.I("dct", "creator"),
          LabeledNode(g, v, *item.alleged_creator, "alleged creator", v.I("dct", "Agent"), config));
  }
  if (Present(item.alleged_date)) {
    claim(v.I("dct", "date"), LabeledNode(g, v, *item.alleged_date, "alleged date",
                                          v.I("dct", "PeriodOfTime"), config));
  }
  if (Present(item.alleged_location)) {
    const Term place = LabeledNode(g, v, *item.alleged_location, "alleged location",
                                   v.I("dct", "Location"), config);
    const Term predicate = Term::MakeIri(config.location_predicate);
    g.Add(node, predicate, place);
    claim(predicate, place);
  }
  if (any_claim) {
    g.Add(self, v.Type(), v.I("hico", "InterpretationAct"));
    g.Add(self, v.I("prov", "wasAttributedTo"), node);
  }
}

void MapCognizer(Graph& g, const Vocab& v, const linker::LinkedEntity& e, const MapConfig& config) {
  const Term node = v.Kb(CognizerLocal(e));
  g.Add(node, v.Type(), v.I("dct", "Agent"));
  if (!e.collective && e.cluster.entity_type == ner::EntityLabel::kPerson) {
    g.Add(node, v.Type(), v.I("sebi", "Human"));
  }
  const std::string& primary = e.cluster.primary_mention;
  g.Add(node, v.I("rdfs", "label"), Lang(primary, config));
  for (const auto& m : e.cluster.all_mentions) {
    if (m != primary) g.Add(node, v.I("skos", "altLabel"), Lang(m, config));
  }
  if (e.qid) {
    static const std::regex kQid("Q[1-9][0-9]*");
    if (!std::regex_match(*e.qid, kQid)) {
      throw Error(ErrorKind::kMapping, "cognizer '" + primary + "' has malformed QID '" + *e.qid + "'");
    }
    g.Add(node, v.I("owl", "sameAs"), v.I("wd", *e.qid));
  }
  for (const auto& occ : e.occupations) {
    g.Add(node, v.I("wd", "occupation"), LabeledNode(g, v, occ, "occupation", std::nullopt, config));
  }
}

Term HypothesisPredicate(const Vocab& v, model::HypothesisKind kind, const MapConfig& config) {
  switch (kind) {
    case model::HypothesisKind::kAuthorship: return v.I("dct", "creator");
    case model::HypothesisKind::kDating: return v.I("dct", "date");
    case model::HypothesisKind::kLocation: return Term::MakeIri(config.location_predicate);
    case model::HypothesisKind::kMotivation: return v.I("sebi", "intendedTo");
  }
  return v.I("dct", "relation");
}

Term HypothesisClass(const Vocab& v, model::HypothesisKind kind) {
  switch (kind) {
    case model::HypothesisKind::kAuthorship: return v.I("dct", "Agent");
    case model::HypothesisKind::kDating: return v.I("dct", "PeriodOfTime");
    case model::HypothesisKind::kLocation: return v.I("dct", "Location");
    case model::HypothesisKind::kMotivation: return v.I("sebi", "Intention");
  }
  return v.I("rdfs", "Resource");
}

}  // namespace

std::string Slugify(std::string_view label) {
  std::string out;
  bool pending_sep = false;
  auto emit = [&](std::string_view piece) {
    if (piece.empty()) return;
    if (pending_sep && !out.empty()) out.push_back('_');
    pending_sep = false;
    out.append(piece);
  };
  size_t i = 0;
  while (i < label.size()) {
    const char32_t c = NextCodePoint(label, i);
    if (c < 0x80) {
      const char ch = static_cast<char>(c);
      if (ch >= 'A' && ch <= 'Z') {
        const char lower = static_cast<char>(ch - 'A' + 'a');
        emit(std::string_view(&lower, 1));
      } else if ((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9')) {
        emit(std::string_view(&ch, 1));
      } else if (ch == '-') {
        if (out.empty()) continue;  // a slug starts with a letter or digit
        emit("-");
      } else if (IsDropped(c)) {
        continue;
      } else {
        pending_sep = true;
      }
    } else if (IsDropped(c)) {
      continue;
    } else if (c == 0xA0 || c == 0x2013 || c == 0x2014 || (c >= 0x2000 && c <= 0x200A)) {
      pending_sep = true;
    } else {
      emit(FoldLetter(c));
    }
  }
  if (out.empty()) throw Error(ErrorKind::kEmptySlug, "label '" + std::string(label) + "' slugifies to nothing");
  return out;
}

std::string ClassName(std::string_view item_type) {
  std::string out;
  bool upper = true;
  for (char c : item_type) {
    const bool alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    if (!alnum) {
      if (c != '\'') upper = true;
      continue;
    }
    if (upper && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    else if (!upper && c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
    upper = false;
  }
  if (!out.empty() && out[0] >= '0' && out[0] <= '9') out.insert(0, "Item");
  return out;
}

std::string DcmiTypeFor(std::string_view item_type) {
  const auto& table = ItemTypeTable();
  const std::string key = text::FoldForMatch(item_type);
  for (const auto& [dcmi, names] : table.at("types").items()) {
    for (const auto& n : names) {
      if (text::FoldForMatch(n.get<std::string>()) == key) return dcmi;
    }
  }
  // Fall back to the head noun ("illuminated manuscript" -> "manuscript").
  const auto words = text::SplitWhitespace(key);
  if (words.size() > 1) {
    for (const auto& [dcmi, names] : table.at("types").items()) {
      for (const auto& n : names) {
        if (text::FoldForMatch(n.get<std::string>()) == words.back()) return dcmi;
      }
    }
  }
  return table.at("default").get<std::string>();
}

std::string CognizerLocal(const linker::LinkedEntity& entity) {
  const std::string slug = SlugOf(entity.cluster.primary_mention, "cognizer");
  return entity.collective ? "collective_" + slug : slug;
}

std::string ActLocal(std::string_view cognizer_local, std::string_view item_title) {
  return std::string(cognizer_local) + "_about_" + SlugOf(item_title, "item");
}

Graph MapCore(const PipelineOutput& output, const MapConfig& config) {
  CheckReferences(output);
  Graph g(config.prefixes);
  const Vocab v(g.prefixes());
  for (const auto& item : output.items) MapItem(g, v, item, config);

  std::map<std::string, const linker::LinkedEntity*> by_key;
  for (const auto& e : output.entities) {
    MapCognizer(g, v, e, config);
    by_key.emplace(e.key(), &e);
  }

  for (const auto& bundle : output.bundles) {
    const auto& op = bundle.opinion;
    const std::string cognizer_local = CognizerLocal(*by_key.at(op.cognizer_id));
    const Term act = v.Kb(ActLocal(cognizer_local, op.subject_item));
    g.Add(act, v.Type(), v.I("hico", "InterpretationAct"));
    g.Add(act, v.I("prov", "wasAttributedTo"), v.Kb(cognizer_local));
    g.Add(act, v.I("prov", "wasQuotedFrom"),
          Term::TypedLiteral(output.doc_id, g.Expand("xsd:anyURI")));
    g.Add(act, v.I("ov", "confidence"), Confidence(op.confidence));
    if (Present(op.date)) {
      g.Add(act, v.I("sebi", "date"),
            LabeledNode(g, v, *op.date, "opinion date", v.I("dct", "PeriodOfTime"), config));
    }
    if (Present(op.location)) {
      g.Add(act, v.I("prov", "atLocation"),
            LabeledNode(g, v, *op.location, "opinion location", v.I("dct", "Location"), config));
    }
    const Term claim = Term::Quoted({ItemNode(v, op.subject_item), v.Type(),
                                     v.I("sebi", std::string(model::OntologyClass(op.opinion)))});
    g.Add(claim, v.I("prov", "wasDerivedFrom"), act);
  }
  return g;
}

Graph MapEvidence(const OpinionBundle& bundle, std::string_view cognizer_local,
                  const MapConfig& config) {
  Graph g(config.prefixes);
  const Vocab v(g.prefixes());
  const std::string act_local = ActLocal(cognizer_local, bundle.opinion.subject_item);
  const Term act = v.Kb(act_local);
  for (size_t i = 0; i < bundle.evidences.size(); ++i) {
    const auto& ev = bundle.evidences[i];
    if (text::Trim(ev.evidence_text).empty() && text::Trim(ev.feature_label).empty()) {
      throw Error(ErrorKind::kMapping, "evidence " + std::to_string(i + 1) + " of " + act_local +
                                           " has no text");
    }
    const std::string label(text::Trim(ev.feature_label.empty() ? ev.evidence_text : ev.feature_label));
    const Term node = v.Kb(act_local + "_" + std::to_string(i + 1));
    const Term feature = LabeledNode(g, v, label, "feature", v.I("sebi", "Feature"), config);
    g.Add(node, v.Type(), v.I("sebi", "Evidence"));
    g.Add(node, v.I("sebi", "assess"), feature);
    g.Add(node, v.I("sebi", "evaluate"), v.I("sebi", std::string(model::Render(ev.evaluation))));
    g.Add(node, v.I("sebi", "hasEvaluationScore"),
          Lang(std::string(model::Render(ev.polarity)), config));
    g.Add(node, v.I("sebi", "support"), act);
    g.Add(node, v.I("ov", "confidence"), Confidence(ev.confidence));
    if (!ev.evidence_text.empty() && ev.evidence_text != label) {
      g.Add(node, v.I("rdfs", "comment"), Lang(ev.evidence_text, config));
    }
    g.Add(feature, v.I("sebi", "isAssessedBy"), node);
    g.Add(feature, v.I("skos", "broader"), v.Kb(model::Render(ev.feature_class)));
    g.Add(act, v.I("cito", "isSupportedBy"), node);
  }
  return g;
}

Graph MapHypotheses(const OpinionBundle& bundle, std::string_view cognizer_local,
                    const MapConfig& config) {
  Graph g(config.prefixes);
  const Vocab v(g.prefixes());
  const Term act = v.Kb(ActLocal(cognizer_local, bundle.opinion.subject_item));
  const Term item = ItemNode(v, bundle.opinion.subject_item);
  for (const auto& h : bundle.hypotheses) {
    if (h.polarity == model::Polarity::kNeutral) {
      throw Error(ErrorKind::kMapping, "hypothesis '" + h.target_text + "' has neutral polarity");
    }
    const Term target = LabeledNode(g, v, h.target_text, "hypothesis target",
                                    HypothesisClass(v, h.kind), config);
    if (h.target_link) {
      static const std::regex kQid("Q[1-9][0-9]*");
      if (!std::regex_match(*h.target_link, kQid)) {
        throw Error(ErrorKind::kMapping, "hypothesis '" + h.target_text + "' has malformed link '" +
                                             *h.target_link + "'");
      }
      g.Add(target, v.I("owl", "sameAs"), v.I("wd", *h.target_link));
    }
    const Term claim = Term::Quoted({item, HypothesisPredicate(v, h.kind, config), target});
    const Term relation = h.polarity == model::Polarity::kPositive ? v.I("prov", "wasDerivedFrom")
                                                                   : v.I("sebi", "refutedBy");
    g.Add(claim, relation, act);
    g.Add(claim, v.I("ov", "confidence"), Confidence(h.confidence));
  }
  return g;
}

Graph MapOutput(const PipelineOutput& output, const MapConfig& config) {
  Graph g = MapCore(output, config);
  std::map<std::string, std::string> locals;
  for (const auto& e : output.entities) locals.emplace(e.key(), CognizerLocal(e));
  for (const auto& bundle : output.bundles) {
    const std::string& local = locals.at(bundle.opinion.cognizer_id);
    g.Merge(MapEvidence(bundle, local, config));
    g.Merge(MapHypotheses(bundle, local, config));
  }
  return g;
}

KgStats ComputeKgStats(const Graph& graph) {
  KgStats stats;
  stats.triple_count = graph.size();
  const std::string type = rdf::RdfType();
  const auto& defaults = rdf::DefaultPrefixes();
  const std::string act_class = defaults.at("hico") + "InterpretationAct";
  const std::string attributed = defaults.at("prov") + "wasAttributedTo";
  const std::string agent = defaults.at("dct") + "Agent";

  std::set<Term> acts;
  std::set<Term> cognizers;
  for (const auto& act : graph.Subjects(type, Term::MakeIri(act_class))) {
    if (!act.is_iri() || act.iri().find("self_statement") != std::string::npos) continue;
    acts.insert(act);
    for (const auto& who : graph.Objects(act, attributed)) {
      if (graph.Contains({who, Term::MakeIri(type), Term::MakeIri(agent)})) cognizers.insert(who);
    }
  }
  stats.interpretation_acts = acts.size();
  stats.cognizers = cognizers.size();
  return stats;
}

}  // namespace sebikg::rdfgen
