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


#include "sebikg/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>

#include "sebikg/error.hpp"
#include "sebikg/rdfgen.hpp"
#include "sebikg/text.hpp"

namespace sebikg::eval {

using nlohmann::json;
using rdf::Term;

namespace {

std::string Fold(std::string_view s) { return text::FoldForMatch(s); }

// Alignment key for item titles; titles without a slug fall back to folding.
std::string TitleKey(std::string_view title) {
  try {
    return rdfgen::Slugify(title);
  } catch (const Error&) {
    return Fold(title);
  }
}

bool Empty(const std::optional<std::string>& s) {
  return !s.has_value() || text::Trim(*s).empty();
}

void CountSlot(ConfusionCounts& c, const std::optional<std::string>& pred,
               const std::optional<std::string>& gold, std::string_view category,
               const EquivalenceList& eq) {
  if (Empty(pred) && Empty(gold)) {
    ++c.tn;
  } else if (Empty(gold)) {
    ++c.fp;
  } else if (Empty(pred)) {
    ++c.fn;
  } else if (eq.Equivalent(category, *pred, *gold)) {
    ++c.tp;
  } else {
    ++c.fp;
    ++c.fn;
  }
}

double Mean(std::span<const double> v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Bundles grouped per (cognizer key, item key).
using PairIndex = std::map<std::pair<std::string, std::string>, const OpinionBundle*>;

PairIndex IndexBundles(std::span<const OpinionBundle> bundles,
                       const std::map<std::string, std::string>& cognizer_map) {
  PairIndex index;
  for (const auto& b : bundles) {
    auto it = cognizer_map.find(b.opinion.cognizer_id);
    if (it == cognizer_map.end()) continue;
    index.emplace(std::make_pair(it->second, TitleKey(b.opinion.subject_item)), &b);
  }
  return index;
}

// Maps both sides onto gold keys so matched pairs share one key.
std::pair<PairIndex, PairIndex> IndexMatched(std::span<const OpinionBundle> pred,
                                             std::span<const OpinionBundle> gold,
                                             const EntityMatches& matches) {
  std::map<std::string, std::string> pred_map;
  std::map<std::string, std::string> gold_map;
  for (const auto& [p, g] : matches) {
    pred_map.emplace(p, g);
    gold_map.emplace(g, g);
  }
  return {IndexBundles(pred, pred_map), IndexBundles(gold, gold_map)};
}

std::string Fixed(double v, int digits = 3) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

json PrfJson(const Prf& p) { return {{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}}; }

json CountsJson(const ConfusionCounts& c) {
  return {{"tp", c.tp}, {"fp", c.fp}, {"tn", c.tn}, {"fn", c.fn}};
}

json SummaryJson(const ScoreSummary& s) {
  return {{"n", s.n}, {"mean", s.mean}, {"std_dev", s.std_dev}, {"min", s.min}, {"max", s.max}};
}

}  // namespace

Prf Prf1(const ConfusionCounts& c) {
  Prf p;
  if (c.tp + c.fp > 0) p.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  if (c.tp + c.fn > 0) p.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  if (p.precision + p.recall > 0) p.f1 = 2 * p.precision * p.recall / (p.precision + p.recall);
  return p;
}

const CategoryScore& PrfReport::at(std::string_view category) const {
  for (const auto& c : categories) {
    if (c.category == category) return c;
  }
  throw Error(ErrorKind::kConfig, "report has no category '" + std::string(category) + "'");
}

PrfReport Aggregate(std::vector<std::pair<std::string, ConfusionCounts>> categories) {
  PrfReport report;
  ConfusionCounts total;
  std::vector<double> p, r, f;
  for (auto& [name, counts] : categories) {
    const Prf prf = Prf1(counts);
    report.categories.push_back({std::move(name), counts, prf});
    total += counts;
    p.push_back(prf.precision);
    r.push_back(prf.recall);
    f.push_back(prf.f1);
  }
  report.micro = Prf1(total);
  report.macro = {Mean(p), Mean(r), Mean(f)};
  return report;
}

EquivalenceList EquivalenceList::FromJson(std::string_view json_text) {
  const json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_array()) {
    throw Error(ErrorKind::kConfig, "equivalence list must be an object with an entries array");
  }
  if (doc.value("version", json(1)) != json(1)) {
    throw Error(ErrorKind::kConfig, "unsupported equivalence list version " + doc["version"].dump());
  }
  EquivalenceList list;
  for (const auto& e : doc["entries"]) {
    if (!e.is_object() || !e.value("category", json()).is_string() ||
        !e.value("pred", json()).is_string() || !e.value("gold", json()).is_string()) {
      throw Error(ErrorKind::kConfig, "equivalence entry needs string category, pred and gold");
    }
    list.Add(e["category"].get<std::string>(), e["pred"].get<std::string>(),
             e["gold"].get<std::string>());
  }
  return list;
}

EquivalenceList EquivalenceList::Load(const std::string& path) {
  return FromJson(text::ReadFile(path));
}

void EquivalenceList::Add(std::string_view category, std::string_view a, std::string_view b) {
  const std::string cat = Fold(category);
  entries_.emplace(cat, Fold(a), Fold(b));
  entries_.emplace(cat, Fold(b), Fold(a));
}

bool EquivalenceList::Equivalent(std::string_view category, std::string_view pred,
                                 std::string_view gold) const {
  const std::string p = Fold(pred);
  const std::string g = Fold(gold);
  return p == g || entries_.count({Fold(category), p, g}) > 0;
}

PrfReport EvalMetadata(std::span<const model::ItemRecord> pred,
                       std::span<const model::ItemRecord> gold, const EquivalenceList& eq) {
  ConfusionCounts title, type, creator, date, location;
  std::map<std::string, const model::ItemRecord*> gold_by_key;
  for (const auto& g : gold) gold_by_key.emplace(TitleKey(g.item_title), &g);
  std::set<std::string> used;
  std::vector<std::string> unmatched_pred;
  const std::optional<std::string> none;

  for (const auto& p : pred) {
    const std::string key = TitleKey(p.item_title);
    auto it = gold_by_key.find(key);
    const model::ItemRecord* g = nullptr;
    if (it != gold_by_key.end() && !used.count(key)) {
      g = it->second;
    } else {
      // Titles can also be declared equivalent.
      for (const auto& [k, candidate] : gold_by_key) {
        if (!used.count(k) && eq.Equivalent("title", p.item_title, candidate->item_title)) {
          g = candidate;
          break;
        }
      }
    }
    if (!g) {
      unmatched_pred.push_back(p.item_title);
      ++title.fp;
      CountSlot(type, p.item_type, none, "type", eq);
      CountSlot(creator, p.alleged_creator, none, "creator", eq);
      CountSlot(date, p.alleged_date, none, "date", eq);
      CountSlot(location, p.alleged_location, none, "location", eq);
      continue;
    }
    used.insert(TitleKey(g->item_title));
    ++title.tp;
    CountSlot(type, p.item_type, g->item_type, "type", eq);
    CountSlot(creator, p.alleged_creator, g->alleged_creator, "creator", eq);
    CountSlot(date, p.alleged_date, g->alleged_date, "date", eq);
    CountSlot(location, p.alleged_location, g->alleged_location, "location", eq);
  }
  std::vector<std::string> unmatched_gold;
  for (const auto& g : gold) {
    if (used.count(TitleKey(g.item_title))) continue;
    unmatched_gold.push_back(g.item_title);
    ++title.fn;
    CountSlot(type, none, g.item_type, "type", eq);
    CountSlot(creator, none, g.alleged_creator, "creator", eq);
    CountSlot(date, none, g.alleged_date, "date", eq);
    CountSlot(location, none, g.alleged_location, "location", eq);
  }
  PrfReport report = Aggregate({{"title", title},
                                {"type", type},
                                {"creator", creator},
                                {"date", date},
                                {"location", location}});
  report.unmatched_pred = std::move(unmatched_pred);
  report.unmatched_gold = std::move(unmatched_gold);
  return report;
}

EntityReport EvalEntities(std::span<const linker::LinkedEntity> pred,
                          std::span<const linker::LinkedEntity> gold) {
  std::vector<int> gold_of(pred.size(), -1);
  std::vector<bool> taken(gold.size(), false);
  // Identity through the knowledge base first.
  for (size_t i = 0; i < pred.size(); ++i) {
    if (!pred[i].qid) continue;
    for (size_t j = 0; j < gold.size(); ++j) {
      if (!taken[j] && gold[j].qid && *gold[j].qid == *pred[i].qid) {
        gold_of[i] = static_cast<int>(j);
        taken[j] = true;
        break;
      }
    }
  }
  // Then any shared mention.
  for (size_t i = 0; i < pred.size(); ++i) {
    if (gold_of[i] >= 0) continue;
    std::set<std::string> mentions;
    for (const auto& m : pred[i].cluster.all_mentions) mentions.insert(Fold(m));
    mentions.insert(Fold(pred[i].cluster.primary_mention));
    for (size_t j = 0; j < gold.size() && gold_of[i] < 0; ++j) {
      if (taken[j]) continue;
      std::vector<std::string> gm = gold[j].cluster.all_mentions;
      gm.push_back(gold[j].cluster.primary_mention);
      for (const auto& m : gm) {
        if (mentions.count(Fold(m))) {
          gold_of[i] = static_cast<int>(j);
          taken[j] = true;
          break;
        }
      }
    }
  }
  EntityReport report;
  for (size_t i = 0; i < pred.size(); ++i) {
    if (gold_of[i] < 0) {
      ++report.counts.fp;
    } else {
      ++report.counts.tp;
      report.matches.emplace_back(pred[i].key(), gold[static_cast<size_t>(gold_of[i])].key());
    }
  }
  report.counts.fn = static_cast<size_t>(std::count(taken.begin(), taken.end(), false));
  report.prf = Prf1(report.counts);
  return report;
}

EvidenceScore ScoreEvidence(const model::EvidenceRecord& pred, const model::EvidenceRecord& gold,
                            const EquivalenceList& eq) {
  EvidenceScore s;
  s.feature = eq.Equivalent("feature", pred.feature_label, gold.feature_label);
  s.evaluation = pred.evaluation == gold.evaluation;
  s.feature_class = pred.feature_class == gold.feature_class;
  s.polarity = pred.polarity == gold.polarity;
  s.points = int{s.feature} + int{s.evaluation} + int{s.feature_class} + int{s.polarity};
  return s;
}

EvidenceReport EvalEvidence(std::span<const OpinionBundle> pred, std::span<const OpinionBundle> gold,
                            const EntityMatches& matches, const EquivalenceList& eq) {
  const auto [pred_index, gold_index] = IndexMatched(pred, gold, matches);
  EvidenceReport report;
  double total = 0;
  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& [k, b] : pred_index) keys.insert(k);
  for (const auto& [k, b] : gold_index) keys.insert(k);

  for (const auto& key : keys) {
    static const std::vector<model::EvidenceRecord> kNone;
    auto pi = pred_index.find(key);
    auto gi = gold_index.find(key);
    const auto& pe = pi == pred_index.end() ? kNone : pi->second->evidences;
    const auto& ge = gi == gold_index.end() ? kNone : gi->second->evidences;

    struct Candidate {
      int points;
      size_t g;
      size_t p;
    };
    std::vector<Candidate> candidates;
    for (size_t g = 0; g < ge.size(); ++g) {
      for (size_t p = 0; p < pe.size(); ++p) {
        candidates.push_back({ScoreEvidence(pe[p], ge[g], eq).points, g, p});
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return std::tie(b.points, a.g, a.p) < std::tie(a.points, b.g, b.p);
    });
    std::vector<bool> g_used(ge.size(), false), p_used(pe.size(), false);
    size_t paired = 0;
    for (const auto& c : candidates) {
      if (g_used[c.g] || p_used[c.p]) continue;
      g_used[c.g] = p_used[c.p] = true;
      total += c.points;
      ++paired;
    }
    report.paired += paired;
    report.unmatched_gold += ge.size() - paired;
    report.unmatched_pred += pe.size() - paired;
  }
  const size_t denom = report.paired + report.unmatched_gold + report.unmatched_pred;
  report.mean_score = denom == 0 ? 0.0 : total / static_cast<double>(denom);
  report.percentage = report.mean_score / 4.0;
  return report;
}

PrfReport EvalHypotheses(std::span<const OpinionBundle> pred, std::span<const OpinionBundle> gold,
                         const EntityMatches& matches, const EquivalenceList& eq) {
  const auto [pred_index, gold_index] = IndexMatched(pred, gold, matches);
  ConfusionCounts type;
  std::map<model::HypothesisKind, ConfusionCounts> kinds;
  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& [k, b] : pred_index) keys.insert(k);
  for (const auto& [k, b] : gold_index) keys.insert(k);

  for (const auto& key : keys) {
    auto pi = pred_index.find(key);
    auto gi = gold_index.find(key);
    const OpinionBundle* p = pi == pred_index.end() ? nullptr : pi->second;
    const OpinionBundle* g = gi == gold_index.end() ? nullptr : gi->second;
    if (p && g) {
      if (p->opinion.opinion == g->opinion.opinion) {
        ++type.tp;
      } else {
        ++type.fp;
        ++type.fn;
      }
    } else if (p) {
      ++type.fp;
    } else {
      ++type.fn;
    }
    std::vector<bool> g_used(g ? g->hypotheses.size() : 0, false);
    if (p) {
      for (const auto& h : p->hypotheses) {
        bool hit = false;
        for (size_t j = 0; g && j < g->hypotheses.size() && !hit; ++j) {
          const auto& gh = g->hypotheses[j];
          if (!g_used[j] && gh.kind == h.kind && gh.polarity == h.polarity &&
              eq.Equivalent("hypothesis", h.target_text, gh.target_text)) {
            g_used[j] = hit = true;
          }
        }
        ++(hit ? kinds[h.kind].tp : kinds[h.kind].fp);
      }
    }
    for (size_t j = 0; j < g_used.size(); ++j) {
      if (!g_used[j]) ++kinds[g->hypotheses[j].kind].fn;
    }
  }
  return Aggregate({{"type", type},
                    {"creator", kinds[model::HypothesisKind::kAuthorship]},
                    {"date", kinds[model::HypothesisKind::kDating]},
                    {"location", kinds[model::HypothesisKind::kLocation]}});
}

namespace {

// Namespaces of the mapping vocabulary.
struct Ns {
  std::string rdfs, dct, prov, sebi, hico, cito, skos, ov, kb;

  Ns() {
    const auto& p = rdf::DefaultPrefixes();
    rdfs = p.at("rdfs");
    dct = p.at("dct");
    prov = p.at("prov");
    sebi = p.at("sebi");
    hico = p.at("hico");
    cito = p.at("cito");
    skos = p.at("skos");
    ov = p.at("ov");
    kb = p.at("kb");
  }
};

std::string LocalName(const std::string& iri) {
  const size_t cut = iri.find_last_of("#/");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

std::optional<std::string> LiteralOf(const rdf::Graph& g, const Term& s, const std::string& p) {
  for (const auto& o : g.Objects(s, p)) {
    if (o.is_literal()) return o.literal().lexical;
  }
  return std::nullopt;
}

std::string LabelOf(const rdf::Graph& g, const Term& node, const Ns& ns) {
  if (auto l = LiteralOf(g, node, ns.rdfs + "label")) return *l;
  if (auto t = LiteralOf(g, node, ns.dct + "title")) return *t;
  return node.is_iri() ? LocalName(node.iri()) : rdf::RenderTerm(node, g.prefixes());
}

std::optional<model::OpinionClass> OpinionOf(const std::string& iri, const Ns& ns) {
  if (iri.rfind(ns.sebi, 0) != 0) return std::nullopt;
  const std::string local = iri.substr(ns.sebi.size());
  for (auto c : model::kAllOpinionClasses) {
    if (model::OntologyClass(c) == local) return c;
  }
  return std::nullopt;
}

// Trailing evidence index of "kb:..._N"; evidence without one sorts last.
size_t EvidenceIndex(const Term& t) {
  if (!t.is_iri()) return SIZE_MAX;
  const std::string& iri = t.iri();
  const size_t cut = iri.find_last_of('_');
  if (cut == std::string::npos) return SIZE_MAX;
  try {
    return std::stoul(iri.substr(cut + 1));
  } catch (const std::exception&) {
    return SIZE_MAX;
  }
}

}  // namespace

std::vector<std::string> Rehydrate(const rdf::Graph& graph) {
  const Ns ns;
  const std::string type = rdf::RdfType();
  std::vector<Term> acts;
  for (const auto& a : graph.Subjects(type, Term::MakeIri(ns.hico + "InterpretationAct"))) {
    if (a.is_iri() && a.iri().find("self_statement") == std::string::npos) acts.push_back(a);
  }
  std::sort(acts.begin(), acts.end());

  std::vector<std::string> out;
  for (const auto& act : acts) {
    const std::string name = LocalName(act.iri());
    const auto agents = graph.Objects(act, ns.prov + "wasAttributedTo");
    if (agents.size() != 1) {
      throw Error(ErrorKind::kRehydration, "act " + name + " needs exactly one agent");
    }
    // Claims derived from or refuted by the act, in triple order.
    std::optional<std::string> item, opinion;
    std::vector<std::string> hypotheses;
    for (const auto& t : graph.triples()) {
      if (!t.subject.is_quoted() || !(t.object == act)) continue;
      const std::string& rel = t.predicate.iri();
      const bool positive = rel == ns.prov + "wasDerivedFrom";
      if (!positive && rel != ns.sebi + "refutedBy") continue;
      const rdf::Triple& claim = t.subject.quoted();
      const std::string& pred = claim.predicate.iri();
      if (pred == type && claim.object.is_iri()) {
        if (auto c = OpinionOf(claim.object.iri(), ns)) {
          item = LabelOf(graph, claim.subject, ns);
          opinion = std::string(model::Render(*c));
        }
        continue;
      }
      std::string kind;
      if (pred == ns.dct + "creator") {
        kind = "authorship";
      } else if (pred == ns.dct + "date") {
        kind = "dating";
      } else if (pred == ns.sebi + "intendedTo") {
        kind = "motivation";
      } else {
        kind = "location";
      }
      std::string confidence = "High";
      for (const auto& o : graph.Objects(t.subject, ns.ov + "confidence")) {
        if (o.is_literal()) {
          try {
            confidence = std::string(model::Render(model::ConfidenceFromValue(std::stod(o.literal().lexical))));
          } catch (const std::exception&) {
          }
        }
      }
      hypotheses.push_back(kind + " = " + LabelOf(graph, claim.object, ns) + " (" +
                           (positive ? "positive" : "negative") + ", " + confidence + ")");
    }
    if (!opinion) throw Error(ErrorKind::kRehydration, "act " + name + " has no opinion claim");
    std::sort(hypotheses.begin(), hypotheses.end());

    std::string block = LabelOf(graph, agents.front(), ns) + " classified " + *item + " as " + *opinion;
    for (const auto& d : graph.Objects(act, ns.sebi + "date")) block += " in " + LabelOf(graph, d, ns);
    for (const auto& l : graph.Objects(act, ns.prov + "atLocation")) block += " at " + LabelOf(graph, l, ns);
    block += ".";

    auto evidence = graph.Objects(act, ns.cito + "isSupportedBy");
    std::stable_sort(evidence.begin(), evidence.end(), [](const Term& a, const Term& b) {
      return std::make_pair(EvidenceIndex(a), a) < std::make_pair(EvidenceIndex(b), b);
    });
    std::vector<std::string> parts;
    for (const auto& ev : evidence) {
      const auto features = graph.Objects(ev, ns.sebi + "assess");
      if (features.empty()) {
        throw Error(ErrorKind::kRehydration, "evidence of " + name + " assesses no feature");
      }
      const Term& feature = features.front();
      std::string cls = "unclassified";
      for (const auto& b : graph.Objects(feature, ns.skos + "broader")) {
        if (b.is_iri()) cls = LocalName(b.iri());
      }
      std::string criterion = "unspecified";
      for (const auto& c : graph.Objects(ev, ns.sebi + "evaluate")) {
        if (c.is_iri()) criterion = LocalName(c.iri());
      }
      const std::string polarity = LiteralOf(graph, ev, ns.sebi + "hasEvaluationScore").value_or("neutral");
      parts.push_back(LabelOf(graph, feature, ns) + " (" + cls + ") evaluated for " + criterion + ": " +
                      polarity);
    }
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
      return s;
    };
    if (!parts.empty()) block += " Evidence: " + join(parts) + ".";
    if (!hypotheses.empty()) block += " Hypotheses: " + join(hypotheses) + ".";
    out.push_back(std::move(block));
  }
  return out;
}

std::string_view RubricName(Rubric rubric) {
  return rubric == Rubric::kCorrectness ? "correctness" : "representativeness";
}

double GevalJudge(std::span<const std::string> pred, std::span<const std::string> gold,
                  Rubric rubric, const llm::Gateway& gateway, const llm::PromptLibrary& prompts,
                  const std::string& doc_id) {
  if (gateway.backend().is_fixture() && std::equal(pred.begin(), pred.end(), gold.begin(), gold.end())) {
    return 1.0;
  }
  auto join = [](std::span<const std::string> v) {
    std::string s;
    for (const auto& line : v) s += "- " + line + "\n";
    return s.empty() ? std::string("(none)\n") : s;
  };
  const auto prompt = prompts.Build(
      llm::kJudge,
      {{"rubric_id", std::string(RubricName(rubric))}, {"gold", join(gold)}, {"pred", join(pred)}},
      doc_id, std::string(RubricName(rubric)), 0);
  json reply;
  try {
    reply = gateway.CompleteStructured(prompt);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kSchemaViolation) {
      throw Error(ErrorKind::kJudgeFormat, std::string("judge reply is not an integer 0-9: ") + e.what());
    }
    throw;
  }
  return reply.at("score").get<double>() / 9.0;
}

ScoreSummary Summarize(std::span<const double> scores) {
  ScoreSummary s;
  s.n = scores.size();
  if (scores.empty()) return s;
  s.mean = Mean(scores);
  double sq = 0;
  for (double v : scores) sq += (v - s.mean) * (v - s.mean);
  s.std_dev = std::sqrt(sq / static_cast<double>(scores.size()));
  const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

GevalReport RunGeval(std::span<const GevalInput> docs, const llm::Gateway& gateway,
                     const llm::PromptLibrary& prompts) {
  GevalReport report;
  std::vector<double> c, r;
  for (const auto& d : docs) {
    c.push_back(GevalJudge(d.pred, d.gold, Rubric::kCorrectness, gateway, prompts, d.doc_id));
    r.push_back(GevalJudge(d.pred, d.gold, Rubric::kRepresentativeness, gateway, prompts, d.doc_id));
    report.correctness[d.doc_id] = c.back();
    report.representativeness[d.doc_id] = r.back();
  }
  report.correctness_summary = Summarize(c);
  report.representativeness_summary = Summarize(r);
  return report;
}

json ToJson(const PrfReport& report) {
  json cats = json::array();
  for (const auto& c : report.categories) {
    json entry = PrfJson(c.prf);
    entry["category"] = c.category;
    entry["counts"] = CountsJson(c.counts);
    cats.push_back(std::move(entry));
  }
  return {{"categories", cats},
          {"micro", PrfJson(report.micro)},
          {"macro", PrfJson(report.macro)},
          {"unmatched_pred", report.unmatched_pred},
          {"unmatched_gold", report.unmatched_gold}};
}

json ToJson(const EntityReport& report) {
  json pairs = json::array();
  for (const auto& [p, g] : report.matches) pairs.push_back({{"pred", p}, {"gold", g}});
  return {{"counts", CountsJson(report.counts)}, {"prf", PrfJson(report.prf)}, {"matches", pairs}};
}

json ToJson(const EvidenceReport& report) {
  return {{"mean_score", report.mean_score},
          {"percentage", report.percentage},
          {"paired", report.paired},
          {"unmatched_gold", report.unmatched_gold},
          {"unmatched_pred", report.unmatched_pred}};
}

json ToJson(const GevalReport& report) {
  return {{"correctness", {{"per_document", report.correctness},
                           {"summary", SummaryJson(report.correctness_summary)}}},
          {"representativeness", {{"per_document", report.representativeness},
                                  {"summary", SummaryJson(report.representativeness_summary)}}}};
}

std::string FormatTable(const PrfReport& report, std::string_view title) {
  char line[128];
  std::string out(title);
  out += "\n";
  std::snprintf(line, sizeof(line), "%-12s %9s %9s %9s %5s %5s %5s %5s\n", "category", "precision",
                "recall", "f1", "tp", "fp", "fn", "tn");
  out += line;
  auto row = [&](const std::string& name, const Prf& p, const ConfusionCounts* c) {
    if (c) {
      std::snprintf(line, sizeof(line), "%-12s %9s %9s %9s %5zu %5zu %5zu %5zu\n", name.c_str(),
                    Fixed(p.precision).c_str(), Fixed(p.recall).c_str(), Fixed(p.f1).c_str(), c->tp,
                    c->fp, c->fn, c->tn);
    } else {
      std::snprintf(line, sizeof(line), "%-12s %9s %9s %9s\n", name.c_str(), Fixed(p.precision).c_str(),
                    Fixed(p.recall).c_str(), Fixed(p.f1).c_str());
    }
    out += line;
  };
  for (const auto& c : report.categories) row(c.category, c.prf, &c.counts);
  row("micro", report.micro, nullptr);
  row("macro", report.macro, nullptr);
  return out;
}

}  // namespace sebikg::eval
