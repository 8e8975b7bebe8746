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


#include "sebikg/linker.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>
#include <unordered_map>

#include "embedded_data.hpp"
#include "http_client.hpp"
#include "sebikg/error.hpp"
#include "sebikg/text.hpp"

namespace sebikg::linker {

using nlohmann::json;

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }

  size_t Find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<size_t> parent_;
  std::vector<size_t> rank_;
};

std::u32string DecodeUtf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    char32_t cp;
    size_t extra;
    if (c < 0x80) {
      cp = c;
      extra = 0;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      extra = 2;
    } else {
      cp = c & 0x07;
      extra = 3;
    }
    for (size_t k = 1; k <= extra && i + k < s.size(); ++k) {
      cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

bool ContainsWord(std::string_view hay, std::string_view needle) {
  if (needle.empty()) return false;
  size_t pos = hay.find(needle);
  while (pos != std::string_view::npos) {
    const size_t end = pos + needle.size();
    const bool left_ok = pos == 0 || !text::IsWordChar(hay[pos - 1]);
    const bool right_ok = end == hay.size() || !text::IsWordChar(hay[end]);
    if (left_ok && right_ok) return true;
    pos = hay.find(needle, pos + 1);
  }
  return false;
}

unsigned long long QidNumber(const std::string& qid) {
  if (qid.size() < 2) return ~0ULL;
  try {
    return std::stoull(qid.substr(1));
  } catch (...) {
    return ~0ULL;
  }
}

std::string InstanceHint(const std::vector<std::string>& instance_of) {
  static const std::set<std::string> kLocation = {
      "Q515",   "Q6256",  "Q486972", "Q1549591", "Q5119",   "Q2221906", "Q3957",
      "Q532",   "Q82794", "Q35657",  "Q1637706", "Q3024240", "Q7275",    "Q48349",
      "Q1620908", "Q839954", "Q23413", "Q44539",  "Q16970",  "Q33837",   "Q8502"};
  static const std::set<std::string> kOrganization = {
      "Q43229", "Q4830453", "Q3918",    "Q33506",  "Q1530022", "Q7278",  "Q2659904",
      "Q327333", "Q163740", "Q31855",   "Q7075",   "Q875538",  "Q9826",  "Q1664720",
      "Q748019", "Q2385804", "Q15911314"};
  static const std::set<std::string> kGroup = {"Q16334295", "Q41710",  "Q2088357",
                                               "Q215380",   "Q2472587", "Q1156831",
                                               "Q874405",   "Q16887380"};
  if (instance_of.empty()) return "unknown";
  for (const auto& id : instance_of) {
    if (id == "Q5") return "person";
  }
  for (const auto& id : instance_of) {
    if (kLocation.count(id)) return "location";
    if (kOrganization.count(id)) return "organization";
    if (kGroup.count(id)) return "group";
  }
  return "other";
}

std::vector<std::string> ClaimIds(const json& claims, const char* property) {
  std::vector<std::string> out;
  if (!claims.contains(property)) return out;
  for (const auto& claim : claims.at(property)) {
    const json* value = &claim;
    for (const char* key : {"mainsnak", "datavalue", "value", "id"}) {
      if (!value->is_object() || !value->contains(key)) {
        value = nullptr;
        break;
      }
      value = &value->at(key);
    }
    if (value != nullptr && value->is_string()) out.push_back(value->get<std::string>());
  }
  return out;
}

std::optional<int> ClaimYear(const json& claims, const char* property) {
  if (!claims.contains(property)) return std::nullopt;
  for (const auto& claim : claims.at(property)) {
    const json* value = &claim;
    for (const char* key : {"mainsnak", "datavalue", "value", "time"}) {
      if (!value->is_object() || !value->contains(key)) {
        value = nullptr;
        break;
      }
      value = &value->at(key);
    }
    if (value == nullptr || !value->is_string()) continue;
    // "+1407-00-00T00:00:00Z"
    const std::string time = value->get<std::string>();
    const int sign = !time.empty() && time[0] == '-' ? -1 : 1;
    const size_t start = (!time.empty() && (time[0] == '+' || time[0] == '-')) ? 1 : 0;
    const size_t dash = time.find('-', start);
    try {
      return sign * std::stoi(time.substr(start, dash - start));
    } catch (...) {
      continue;
    }
  }
  return std::nullopt;
}

std::string LabelIn(const json& entity, std::string_view language) {
  const std::string lang(language);
  if (entity.contains("labels") && entity["labels"].contains(lang)) {
    return entity["labels"][lang].value("value", "");
  }
  return {};
}

}  // namespace

std::vector<std::string> DefaultScholarlyOccupations() {
  static const std::vector<std::string> occupations = [] {
    const auto doc = json::parse(embedded::kScholarlyOccupations);
    return doc.at("occupations").get<std::vector<std::string>>();
  }();
  return occupations;
}

std::vector<size_t> ParagraphsMentioning(std::span<const std::string> mentions,
                                         std::span<const corpus::Paragraph> paragraphs) {
  std::vector<size_t> out;
  for (const auto& p : paragraphs) {
    for (const auto& m : mentions) {
      if (ContainsWord(p.text, m)) {
        out.push_back(p.index);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EntityCluster> ClusterMentions(std::span<const CognizerDecision> decisions,
                                           std::span<const corpus::Paragraph> paragraphs) {
  DisjointSet sets(decisions.size());
  std::unordered_map<std::string, size_t> owner;  // normalized mention -> decision
  for (size_t i = 0; i < decisions.size(); ++i) {
    std::vector<std::string> mentions = decisions[i].mentions;
    mentions.push_back(decisions[i].entity.surface);
    for (const auto& m : mentions) {
      const std::string key = text::NormalizeWhitespace(m);
      if (key.empty()) continue;
      auto [it, inserted] = owner.emplace(key, i);
      if (!inserted) sets.Union(it->second, i);
    }
  }

  std::vector<EntityCluster> clusters;
  std::unordered_map<size_t, size_t> root_to_cluster;
  std::vector<std::set<std::string>> seen;
  for (size_t i = 0; i < decisions.size(); ++i) {
    const size_t root = sets.Find(i);
    auto [it, inserted] = root_to_cluster.emplace(root, clusters.size());
    if (inserted) {
      EntityCluster c;
      c.entity_type = decisions[i].entity.label;
      clusters.push_back(std::move(c));
      seen.emplace_back();
    }
    EntityCluster& cluster = clusters[it->second];
    std::vector<std::string> mentions{decisions[i].entity.surface};
    mentions.insert(mentions.end(), decisions[i].mentions.begin(), decisions[i].mentions.end());
    for (const auto& m : mentions) {
      std::string key = text::NormalizeWhitespace(m);
      if (key.empty()) continue;
      if (seen[it->second].insert(key).second) cluster.all_mentions.push_back(key);
    }
  }
  for (auto& c : clusters) {
    for (const auto& m : c.all_mentions) {
      if (m.size() > c.primary_mention.size()) c.primary_mention = m;
    }
    c.paragraph_indices = ParagraphsMentioning(c.all_mentions, paragraphs);
  }
  return clusters;
}

size_t EditDistance(std::string_view a_bytes, std::string_view b_bytes) {
  const std::u32string a = DecodeUtf8(a_bytes);
  const std::u32string b = DecodeUtf8(b_bytes);
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), size_t{0});
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double NameSimilarity(std::string_view a, std::string_view b) {
  const std::string fa = text::ToLowerAscii(a);
  const std::string fb = text::ToLowerAscii(b);
  const size_t la = DecodeUtf8(fa).size();
  const size_t lb = DecodeUtf8(fb).size();
  const size_t longest = std::max(la, lb);
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(EditDistance(fa, fb)) / static_cast<double>(longest);
}

bool TypeCompatible(ner::EntityLabel type, std::string_view hint) {
  switch (type) {
    case ner::EntityLabel::kPerson: return hint == "person";
    case ner::EntityLabel::kLocation: return hint == "location";
    case ner::EntityLabel::kOrganization:
    case ner::EntityLabel::kGroup:
      return hint == "organization" || hint == "group";
  }
  return false;
}

ScoreBreakdown ScoreCandidate(const EntityCluster& cluster, const WikidataCandidate& candidate,
                              const LinkerConfig& config) {
  ScoreBreakdown s;
  std::vector<std::string> names{candidate.label};
  names.insert(names.end(), candidate.aliases.begin(), candidate.aliases.end());
  for (const auto& mention : cluster.all_mentions) {
    for (const auto& name : names) {
      if (name.empty()) continue;
      s.name = std::max(s.name, NameSimilarity(mention, name));
    }
  }
  s.type = TypeCompatible(cluster.entity_type, candidate.instance_hint) ? 1.0 : 0.0;
  if (cluster.entity_type != ner::EntityLabel::kPerson) {
    s.occupation = 1.0;
  } else if (candidate.occupations.empty()) {
    s.occupation = 0.5;
  } else {
    const auto& list = config.scholarly_occupations.empty() ? DefaultScholarlyOccupations()
                                                            : config.scholarly_occupations;
    std::set<std::string> scholarly;
    for (const auto& o : list) scholarly.insert(text::FoldForMatch(o));
    s.occupation = std::any_of(candidate.occupations.begin(), candidate.occupations.end(),
                               [&](const std::string& o) {
                                 return scholarly.count(text::FoldForMatch(o)) > 0;
                               })
                       ? 1.0
                       : 0.0;
  }
  s.total = config.weights.name * s.name + config.weights.type * s.type +
            config.weights.occupation * s.occupation;
  return s;
}

std::vector<WikidataCandidate> ParseCandidates(const json& search, const json& entities,
                                               std::string_view language) {
  std::vector<WikidataCandidate> out;
  if (!search.is_object() || !search.contains("search")) return out;
  const json& entity_map = entities.contains("entities") ? entities.at("entities") : entities;
  for (const auto& hit : search.at("search")) {
    WikidataCandidate c;
    c.qid = hit.value("id", "");
    if (c.qid.size() < 2 || c.qid[0] != 'Q' ||
        !std::all_of(c.qid.begin() + 1, c.qid.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      continue;
    }
    c.label = hit.value("label", "");
    if (hit.contains("aliases")) {
      for (const auto& a : hit.at("aliases")) c.aliases.push_back(a.get<std::string>());
    }
    if (entity_map.is_object() && entity_map.contains(c.qid)) {
      const json& e = entity_map.at(c.qid);
      if (std::string l = LabelIn(e, language); !l.empty()) c.label = l;
      const std::string lang(language);
      if (e.contains("aliases") && e["aliases"].contains(lang)) {
        c.aliases.clear();
        for (const auto& a : e["aliases"][lang]) c.aliases.push_back(a.value("value", ""));
      }
      const json claims = e.value("claims", json::object());
      c.instance_hint = InstanceHint(ClaimIds(claims, "P31"));
      for (const auto& occ : ClaimIds(claims, "P106")) {
        std::string label;
        if (entity_map.contains(occ)) label = LabelIn(entity_map.at(occ), language);
        c.occupations.push_back(label.empty() ? occ : label);
      }
      c.birth_year = ClaimYear(claims, "P569");
      c.death_year = ClaimYear(claims, "P570");
    }
    out.push_back(std::move(c));
  }
  return out;
}

json CandidateToJson(const WikidataCandidate& c) {
  json j;
  j["qid"] = c.qid;
  j["label"] = c.label;
  j["aliases"] = c.aliases;
  j["instance_hint"] = c.instance_hint;
  j["occupations"] = c.occupations;
  j["birth_year"] = c.birth_year ? json(*c.birth_year) : json(nullptr);
  j["death_year"] = c.death_year ? json(*c.death_year) : json(nullptr);
  return j;
}

WikidataCandidate CandidateFromJson(const json& j) {
  WikidataCandidate c;
  c.qid = j.at("qid").get<std::string>();
  c.label = j.value("label", "");
  c.aliases = j.value("aliases", std::vector<std::string>{});
  c.instance_hint = j.value("instance_hint", "unknown");
  c.occupations = j.value("occupations", std::vector<std::string>{});
  if (j.contains("birth_year") && j["birth_year"].is_number()) c.birth_year = j["birth_year"].get<int>();
  if (j.contains("death_year") && j["death_year"].is_number()) c.death_year = j["death_year"].get<int>();
  return c;
}

WikibaseSource::WikibaseSource(LinkerConfig config) : config_(std::move(config)) {}

json WikibaseSource::Call(const std::vector<std::pair<std::string, std::string>>& params) {
  if (config_.max_requests > 0 && requests_.fetch_add(1) >= config_.max_requests) {
    throw Error(ErrorKind::kQuotaExceeded, "Wikibase request budget exhausted");
  }
  const auto res = http::Get(config_.wikibase_url, params,
                             {{"User-Agent", "sebikg/1.0 (entity linking)"}},
                             config_.timeout_seconds);
  if (res.status == 429) throw Error(ErrorKind::kQuotaExceeded, "Wikibase rate limit (HTTP 429)");
  if (res.status != 200) {
    throw Error(ErrorKind::kTransport, "Wikibase returned HTTP " + std::to_string(res.status));
  }
  try {
    return json::parse(res.body);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kTransport, std::string("malformed Wikibase response: ") + e.what());
  }
}

std::vector<WikidataCandidate> WikibaseSource::Search(const std::string& mention) {
  if (text::Trim(mention).empty()) return {};
  const json search = Call({{"action", "wbsearchentities"},
                            {"search", mention},
                            {"language", config_.language},
                            {"uselang", config_.language},
                            {"type", "item"},
                            {"limit", std::to_string(config_.search_limit)},
                            {"format", "json"}});
  std::vector<std::string> ids;
  for (const auto& hit : search.value("search", json::array())) ids.push_back(hit.value("id", ""));
  if (ids.empty()) return {};

  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += "|";
      out += s;
    }
    return out;
  };
  json entities = Call({{"action", "wbgetentities"},
                        {"ids", join(ids)},
                        {"props", "labels|aliases|claims"},
                        {"languages", config_.language},
                        {"format", "json"}});
  json& entity_map = entities["entities"];

  std::set<std::string> occupation_ids;
  for (const auto& [qid, e] : entity_map.items()) {
    for (const auto& occ : ClaimIds(e.value("claims", json::object()), "P106")) {
      if (!entity_map.contains(occ)) occupation_ids.insert(occ);
    }
  }
  if (!occupation_ids.empty()) {
    // wbgetentities accepts at most 50 ids per call.
    std::vector<std::string> batch;
    auto flush = [&] {
      if (batch.empty()) return;
      const json labels = Call({{"action", "wbgetentities"},
                                {"ids", join(batch)},
                                {"props", "labels"},
                                {"languages", config_.language},
                                {"format", "json"}});
      for (const auto& [qid, e] : labels.value("entities", json::object()).items()) {
        entity_map[qid] = e;
      }
      batch.clear();
    };
    for (const auto& id : occupation_ids) {
      batch.push_back(id);
      if (batch.size() == 50) flush();
    }
    flush();
  }
  return ParseCandidates(search, entities, config_.language);
}

FixtureSource::FixtureSource(json fixtures, std::string language)
    : fixtures_(std::move(fixtures)), language_(std::move(language)) {}

FixtureSource FixtureSource::Load(const std::string& path, std::string language) {
  try {
    return FixtureSource(json::parse(text::ReadFile(path)), std::move(language));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kConfig, "malformed Wikibase fixture " + path + ": " + e.what());
  }
}

std::vector<WikidataCandidate> FixtureSource::Search(const std::string& mention) {
  if (!fixtures_.contains(mention)) return {};
  const json& rec = fixtures_.at(mention);
  return ParseCandidates(rec.value("search", json::object()),
                         rec.value("entities", json::object()), language_);
}

CachedSource::CachedSource(std::unique_ptr<CandidateSource> inner, std::string cache_path)
    : inner_(std::move(inner)), cache_path_(std::move(cache_path)) {
  std::error_code ec;
  if (cache_path_.empty() || !std::filesystem::exists(cache_path_, ec)) return;
  try {
    const json doc = json::parse(text::ReadFile(cache_path_));
    for (const auto& [mention, list] : doc.items()) {
      std::vector<WikidataCandidate> cands;
      for (const auto& c : list) cands.push_back(CandidateFromJson(c));
      cache_.emplace(mention, std::move(cands));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kConfig, "corrupt candidate cache " + cache_path_ + ": " + e.what());
  }
}

std::vector<WikidataCandidate> CachedSource::Search(const std::string& mention) {
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(mention);
    if (it != cache_.end()) return it->second;
  }
  ++inner_calls_;
  auto fetched = inner_->Search(mention);
  std::unique_lock lock(mu_);
  auto [it, inserted] = cache_.emplace(mention, std::move(fetched));
  return it->second;
}

void CachedSource::Save() const {
  if (cache_path_.empty()) return;
  json doc = json::object();
  {
    std::shared_lock lock(mu_);
    for (const auto& [mention, cands] : cache_) {
      json list = json::array();
      for (const auto& c : cands) list.push_back(CandidateToJson(c));
      doc[mention] = std::move(list);
    }
  }
  text::WriteFile(cache_path_, doc.dump(2) + "\n");
}

std::unique_ptr<CachedSource> MakeSource(const LinkerConfig& config) {
  std::unique_ptr<CandidateSource> inner;
  if (!config.fixture_path.empty()) {
    inner = std::make_unique<FixtureSource>(FixtureSource::Load(config.fixture_path, config.language));
  } else {
    inner = std::make_unique<WikibaseSource>(config);
  }
  return std::make_unique<CachedSource>(std::move(inner), config.cache_path);
}

bool IsCollectiveMention(std::string_view mention) {
  static const std::set<std::string> kPluralNouns = {
      "scholars", "historians",   "critics",      "experts",    "researchers",
      "academics", "philologists", "archaeologists", "specialists", "theologians",
      "commentators", "authorities", "art historians"};
  const auto words = text::SplitWhitespace(text::FoldForMatch(mention));
  if (words.empty()) return false;
  return kPluralNouns.count(words.back()) > 0;
}

Linker::Linker(LinkerConfig config, std::shared_ptr<CandidateSource> source)
    : config_(std::move(config)), source_(std::move(source)) {}

LinkedEntity Linker::Choose(const EntityCluster& cluster,
                            std::span<const WikidataCandidate> candidates) const {
  LinkedEntity out;
  out.cluster = cluster;
  const WikidataCandidate* best = nullptr;
  double best_score = -1.0;
  for (const auto& c : candidates) {
    const double score = ScoreCandidate(cluster, c, config_).total;
    if (score > best_score ||
        (score == best_score && best != nullptr && QidNumber(c.qid) < QidNumber(best->qid))) {
      best = &c;
      best_score = score;
    }
  }
  if (best == nullptr) return out;
  out.link_score = best_score;
  if (best_score + 1e-12 < config_.threshold) return out;
  out.qid = best->qid;
  out.wikidata_label = best->label;
  out.occupations = best->occupations;
  out.birth_year = best->birth_year;
  out.death_year = best->death_year;
  return out;
}

LinkedEntity Linker::Link(const EntityCluster& cluster) const {
  if (IsCollectiveMention(cluster.primary_mention)) {
    LinkedEntity out;
    out.cluster = cluster;
    out.collective = true;
    return out;
  }
  if (cluster.primary_mention.empty() || source_ == nullptr) {
    LinkedEntity out;
    out.cluster = cluster;
    return out;
  }
  const auto candidates = source_->Search(cluster.primary_mention);
  return Choose(cluster, candidates);
}

}  // namespace sebikg::linker
