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


#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "sebikg/error.hpp"
#include "sebikg/evaluator.hpp"
#include "sebikg/llm_gateway.hpp"
#include "sebikg/rdf.hpp"
#include "sebikg/rdfgen.hpp"
#include "sebikg/text.hpp"
#include "test_support.hpp"

namespace sebikg::eval {
namespace {

using model::ConfidenceLevel;
using model::EvaluationCriterion;
using model::FeatureClass;
using model::HypothesisKind;
using model::Polarity;
using nlohmann::json;
using sebikg::testing::TempDir;

// Independent arithmetic for the expected values below.
double P(double tp, double fp) { return tp + fp == 0 ? 0 : tp / (tp + fp); }
double R(double tp, double fn) { return tp + fn == 0 ? 0 : tp / (tp + fn); }
double F(double p, double r) { return p + r == 0 ? 0 : 2 * p * r / (p + r); }

linker::LinkedEntity Entity(const std::string& name, std::optional<std::string> qid = std::nullopt,
                            std::vector<std::string> extra = {}) {
  linker::LinkedEntity e;
  e.cluster.primary_mention = name;
  e.cluster.all_mentions = {name};
  e.cluster.all_mentions.insert(e.cluster.all_mentions.end(), extra.begin(), extra.end());
  e.qid = std::move(qid);
  return e;
}

model::EvidenceRecord Ev(const std::string& label, FeatureClass cls, EvaluationCriterion crit, Polarity pol) {
  return {"", label, cls, crit, pol, ConfidenceLevel::kHigh};
}

OpinionBundle Bundle(const std::string& who, const std::string& item = "Item") {
  OpinionBundle b;
  b.opinion.cognizer_id = who;
  b.opinion.subject_item = item;
  b.opinion.opinion = model::OpinionClass::kForgery;
  return b;
}

TEST(PrfTest, PublishedEntityRows) {
  struct Row {
    size_t tp, fp, fn;
    double p, r, f;
  };
  for (const Row& row : {Row{71, 31, 22, 0.696, 0.763, 0.728}, Row{145, 57, 14, 0.718, 0.912, 0.803},
                         Row{107, 64, 24, 0.626, 0.817, 0.709}}) {
    const auto prf = Prf1({row.tp, row.fp, 0, row.fn});
    EXPECT_NEAR(prf.precision, row.p, 0.001);
    EXPECT_NEAR(prf.recall, row.r, 0.001);
    EXPECT_NEAR(prf.f1, row.f, 0.001);
  }
}

TEST(PrfTest, ZeroDenominatorsAndF1Invariant) {
  const auto zero = Prf1({0, 0, 0, 0});
  EXPECT_EQ(zero.precision, 0);
  EXPECT_EQ(zero.recall, 0);
  EXPECT_EQ(zero.f1, 0);
  sebikg::testing::GraphGenerator gen(17);
  for (int i = 0; i < 500; ++i) {
    const ConfusionCounts c{gen.Uniform(20), gen.Uniform(20), gen.Uniform(20), gen.Uniform(20)};
    const auto prf = Prf1(c);
    EXPECT_DOUBLE_EQ(prf.precision, P(c.tp, c.fp));
    EXPECT_DOUBLE_EQ(prf.recall, R(c.tp, c.fn));
    EXPECT_NEAR(prf.f1, F(prf.precision, prf.recall), 1e-12);
    EXPECT_GE(prf.f1, 0);
    EXPECT_LE(prf.f1, 1);
  }
}

TEST(AggregateTest, MetadataTablesFromSyntheticCounts) {
  // 45 items per model.
  const auto claude = Aggregate({{"title", {45, 0, 0, 0}},
                                 {"type", {45, 0, 0, 0}},
                                 {"creator", {42, 1, 1, 1}},
                                 {"date", {44, 1, 0, 0}},
                                 {"location", {44, 1, 0, 0}}});
  EXPECT_NEAR(claude.at("creator").prf.f1, 0.977, 0.001);
  EXPECT_NEAR(claude.at("date").prf.precision, 0.978, 0.001);
  EXPECT_NEAR(claude.at("date").prf.f1, 0.989, 0.001);
  EXPECT_NEAR(claude.micro.precision, 0.987, 0.001);
  EXPECT_NEAR(claude.micro.recall, 0.995, 0.001);
  EXPECT_NEAR(claude.micro.f1, 0.991, 0.001);
  EXPECT_NEAR(claude.macro.precision, (1 + 1 + 42.0 / 43 + 44.0 / 45 + 44.0 / 45) / 5, 1e-12);

  const auto gpt = Aggregate({{"title", {40, 5, 0, 0}},
                              {"type", {43, 2, 0, 0}},
                              {"creator", {43, 2, 0, 0}},
                              {"date", {41, 4, 0, 0}},
                              {"location", {45, 0, 0, 0}}});
  EXPECT_NEAR(gpt.at("title").prf.f1, 0.941, 0.001);
  EXPECT_NEAR(gpt.at("date").prf.f1, 0.953, 0.001);
  EXPECT_NEAR(gpt.micro.precision, 0.942, 0.001);
  EXPECT_NEAR(gpt.micro.recall, 1.000, 0.001);
  EXPECT_NEAR(gpt.micro.f1, 0.970, 0.001);
  EXPECT_THROW(gpt.at("motivation"), std::exception);
}

TEST(EquivalenceTest, SymmetricAndFolded) {
  auto eq = EquivalenceList::FromJson(
      R"({"version": 1, "entries": [{"category": "date", "pred": "4th c.", "gold": "4th century"}]})");
  EXPECT_TRUE(eq.Equivalent("date", "4th c.", "4th century"));
  EXPECT_TRUE(eq.Equivalent("date", "4TH  CENTURY", "4th c."));
  EXPECT_TRUE(eq.Equivalent("creator", "Valla", " valla "));
  EXPECT_FALSE(eq.Equivalent("creator", "4th c.", "4th century"));
  EXPECT_THROW(EquivalenceList::FromJson(R"({"version": 2, "entries": []})"), Error);
}

TEST(MetadataTest, PlantedErrorsMatchHandCount) {
  std::vector<model::ItemRecord> gold, pred;
  for (int i = 0; i < 10; ++i) {
    model::ItemRecord r;
    r.item_title = "Item " + std::to_string(i);
    r.item_type = "charter";
    r.alleged_creator = "Maker " + std::to_string(i);
    r.alleged_date = std::to_string(1100 + i);
    if (i % 2 == 0) r.alleged_location = "Rome";
    gold.push_back(r);
  }
  pred = gold;
  pred[3].alleged_creator = "Somebody else";  // FP + FN
  pred[5].alleged_date.reset();                // FN
  pred[7].item_title = "  ITEM 7 ";            // still aligned

  const auto report = EvalMetadata(pred, gold, {});
  EXPECT_EQ(report.at("title").counts, (ConfusionCounts{10, 0, 0, 0}));
  EXPECT_EQ(report.at("type").counts, (ConfusionCounts{10, 0, 0, 0}));
  EXPECT_EQ(report.at("creator").counts, (ConfusionCounts{9, 1, 0, 1}));
  EXPECT_EQ(report.at("date").counts, (ConfusionCounts{9, 0, 0, 1}));
  EXPECT_EQ(report.at("location").counts, (ConfusionCounts{5, 0, 5, 0}));
  EXPECT_NEAR(report.at("creator").prf.f1, 0.9, 1e-12);
  EXPECT_NEAR(report.at("date").prf.recall, 0.9, 1e-12);
  EXPECT_NEAR(report.micro.precision, 43.0 / 44.0, 1e-12);
  EXPECT_NEAR(report.micro.recall, 43.0 / 45.0, 1e-12);
  EXPECT_TRUE(report.unmatched_pred.empty());
}

TEST(MetadataTest, EquivalentDateIsReclassified) {
  model::ItemRecord g, p;
  g.item_title = p.item_title = "Donation of Constantine";
  g.alleged_date = "4th century";
  p.alleged_date = "4th c.";
  const std::vector<model::ItemRecord> gold{g}, pred{p};
  EXPECT_EQ(EvalMetadata(pred, gold, {}).at("date").counts, (ConfusionCounts{0, 1, 0, 1}));
  EquivalenceList eq;
  eq.Add("date", "4th c.", "4th century");
  EXPECT_EQ(EvalMetadata(pred, gold, eq).at("date").counts, (ConfusionCounts{1, 0, 0, 0}));
}

TEST(MetadataTest, UnalignedItemsAreReported) {
  model::ItemRecord g, p;
  g.item_title = "Getty kouros";
  p.item_title = "Vinland map";
  const auto report = EvalMetadata(std::vector{p}, std::vector{g}, {});
  EXPECT_EQ(report.unmatched_pred, std::vector<std::string>{"Vinland map"});
  EXPECT_EQ(report.unmatched_gold, std::vector<std::string>{"Getty kouros"});
  EXPECT_EQ(report.at("title").counts, (ConfusionCounts{0, 1, 0, 1}));
}

TEST(EntitiesTest, QidThenMentionMatching) {
  const std::vector<linker::LinkedEntity> gold = {Entity("Lorenzo Valla", "Q214115", {"Valla"}),
                                                  Entity("Federico Zeri", std::nullopt, {"Zeri"})};
  const std::vector<linker::LinkedEntity> pred = {Entity("L. Valla", "Q214115"), Entity("zeri"),
                                                  Entity("Jiri Frel")};
  const auto report = EvalEntities(pred, gold);
  EXPECT_EQ(report.counts, (ConfusionCounts{2, 1, 0, 0}));
  EXPECT_EQ(report.matches, (EntityMatches{{"L. Valla", "Lorenzo Valla"}, {"zeri", "Federico Zeri"}}));
}

TEST(EntitiesTest, MatchingIsOneToOne) {
  const std::vector<linker::LinkedEntity> gold = {Entity("Valla", "Q214115")};
  const std::vector<linker::LinkedEntity> pred = {Entity("Lorenzo Valla", "Q214115"), Entity("Valla")};
  const auto report = EvalEntities(pred, gold);
  EXPECT_EQ(report.counts, (ConfusionCounts{1, 1, 0, 0}));
  EXPECT_EQ(report.matches.size(), 1u);
  EXPECT_EQ(report.matches[0].first, "Lorenzo Valla");
}

TEST(EntitiesTest, SetsSizedToPublishedCounts) {
  std::vector<linker::LinkedEntity> gold, pred;
  for (int i = 0; i < 145; ++i) {
    gold.push_back(Entity("Scholar " + std::to_string(i), "Q" + std::to_string(1000 + i)));
    pred.push_back(Entity("S" + std::to_string(i), "Q" + std::to_string(1000 + i)));
  }
  for (int i = 0; i < 14; ++i) gold.push_back(Entity("Missed " + std::to_string(i)));
  for (int i = 0; i < 57; ++i) pred.push_back(Entity("Spurious " + std::to_string(i)));
  const auto report = EvalEntities(pred, gold);
  EXPECT_EQ(report.counts, (ConfusionCounts{145, 57, 0, 14}));
  EXPECT_NEAR(report.prf.precision, 0.718, 0.001);
  EXPECT_NEAR(report.prf.recall, 0.912, 0.001);
  EXPECT_NEAR(report.prf.f1, 0.803, 0.001);
}

TEST(EvidenceTest, ScoreIsFourMinusMismatchesForEveryPattern) {
  const auto gold = Ev("erasures", FeatureClass::kHandwriting, EvaluationCriterion::kPresence, Polarity::kNegative);
  for (int mask = 0; mask < 16; ++mask) {
    auto pred = gold;
    if (mask & 1) pred.feature_label = "different feature";
    if (mask & 2) pred.evaluation = EvaluationCriterion::kReliability;
    if (mask & 4) pred.feature_class = FeatureClass::kInk;
    if (mask & 8) pred.polarity = Polarity::kNeutral;
    EXPECT_EQ(ScoreEvidence(pred, gold, {}).points, 4 - __builtin_popcount(mask)) << mask;
    // Symmetric in the roles of pred and gold.
    EXPECT_EQ(ScoreEvidence(gold, pred, {}).points, ScoreEvidence(pred, gold, {}).points);
  }
}

TEST(EvidenceTest, PartialCreditWithFeatureEquivalence) {
  const auto gold = Ev("lack of regional terms", FeatureClass::kLanguage, EvaluationCriterion::kPresence,
                       Polarity::kNegative);
  const auto pred = Ev("expected language variety", FeatureClass::kLanguage, EvaluationCriterion::kConsistency,
                       Polarity::kNegative);
  EXPECT_EQ(ScoreEvidence(pred, gold, {}).points, 2);
  EquivalenceList eq;
  eq.Add("feature", "lack of regional terms", "expected language variety");
  const auto s = ScoreEvidence(pred, gold, eq);
  EXPECT_EQ(s.points, 3);
  EXPECT_TRUE(s.feature);
  EXPECT_FALSE(s.evaluation);
}

TEST(EvidenceTest, PerfectHalvedAndHandCounted) {
  const auto a = Ev("a", FeatureClass::kLanguage, EvaluationCriterion::kPresence, Polarity::kNegative);
  const auto b = Ev("b", FeatureClass::kInk, EvaluationCriterion::kConsistency, Polarity::kPositive);
  const auto c = Ev("c", FeatureClass::kStyle, EvaluationCriterion::kReliability, Polarity::kNeutral);
  const auto d = Ev("d", FeatureClass::kContent, EvaluationCriterion::kVeridicality, Polarity::kNegative);
  auto gold = Bundle("Valla");
  gold.evidences = {a, b, c, d};
  const EntityMatches matches = {{"Valla", "Valla"}};

  auto perfect = EvalEvidence(std::vector{gold}, std::vector{gold}, matches, {});
  EXPECT_DOUBLE_EQ(perfect.mean_score, 4.0);
  EXPECT_DOUBLE_EQ(perfect.percentage, 1.0);

  auto half = gold;
  half.evidences = {a, b};
  const auto halved = EvalEvidence(std::vector{half}, std::vector{gold}, matches, {});
  EXPECT_DOUBLE_EQ(halved.mean_score, 2.0);
  EXPECT_EQ(halved.unmatched_gold, 2u);

  // Pred: c with one wrong dimension, a exact, one spurious record.
  auto pred = gold;
  auto c_off = c;
  c_off.polarity = Polarity::kPositive;
  pred.evidences = {c_off, a, Ev("zzz", FeatureClass::kProvenance, EvaluationCriterion::kCompleteness, Polarity::kPositive)};
  const auto mixed = EvalEvidence(std::vector{pred}, std::vector{gold}, matches, {});
  // Greedy: a-a scores 4, c-c_off 3, and the spurious record pairs with b on
  // polarity alone for 1. d stays unpaired: (4 + 3 + 1 + 0) / 4 records.
  EXPECT_DOUBLE_EQ(mixed.mean_score, 2.0);
  EXPECT_DOUBLE_EQ(mixed.percentage, 0.5);
  EXPECT_EQ(mixed.paired, 3u);
  EXPECT_EQ(mixed.unmatched_gold, 1u);
  EXPECT_EQ(mixed.unmatched_pred, 0u);
}

TEST(EvidenceTest, UnmatchedCognizersAreIgnored) {
  auto gold = Bundle("Valla");
  gold.evidences = {Ev("a", FeatureClass::kLanguage, EvaluationCriterion::kPresence, Polarity::kNegative)};
  auto other = Bundle("Stranger");
  other.evidences = gold.evidences;
  const auto report = EvalEvidence(std::vector{other}, std::vector{gold}, {}, {});
  EXPECT_EQ(report.paired, 0u);
  EXPECT_EQ(report.unmatched_pred, 0u);
}

// Builds pred/gold bundle sets whose hypothesis comparison yields the given
// counts per category.
struct HypothesisSetup {
  std::vector<OpinionBundle> pred, gold;
  EntityMatches matches;
};

HypothesisSetup BuildHypotheses(ConfusionCounts type, const std::map<HypothesisKind, ConfusionCounts>& kinds) {
  HypothesisSetup s;
  const size_t n = type.tp + type.fp;  // type.fp == type.fn: every pair is present on both sides
  for (size_t i = 0; i < n; ++i) {
    const std::string who = "Scholar " + std::to_string(i);
    auto g = Bundle(who);
    auto p = Bundle(who);
    if (i >= type.tp) p.opinion.opinion = model::OpinionClass::kAuthentic;
    s.gold.push_back(g);
    s.pred.push_back(p);
    s.matches.emplace_back(who, who);
  }
  for (const auto& [kind, c] : kinds) {
    auto h = [kind](const std::string& t) {
      return model::HypothesisRecord{kind, t, std::nullopt, ConfidenceLevel::kHigh, Polarity::kPositive};
    };
    for (size_t i = 0; i < c.tp; ++i) {
      s.gold[0].hypotheses.push_back(h("shared " + std::to_string(i)));
      s.pred[0].hypotheses.push_back(h("shared " + std::to_string(i)));
    }
    for (size_t i = 0; i < c.fp; ++i) s.pred[0].hypotheses.push_back(h("pred only " + std::to_string(i)));
    for (size_t i = 0; i < c.fn; ++i) s.gold[0].hypotheses.push_back(h("gold only " + std::to_string(i)));
  }
  return s;
}

TEST(HypothesesTest, IdenticalSetsScorePerfectly) {
  const auto s = BuildHypotheses({5, 0, 0, 0}, {{HypothesisKind::kAuthorship, {2, 0, 0, 0}},
                                                {HypothesisKind::kDating, {3, 0, 0, 0}},
                                                {HypothesisKind::kLocation, {1, 0, 0, 0}}});
  const auto report = EvalHypotheses(s.pred, s.gold, s.matches, {});
  EXPECT_DOUBLE_EQ(report.macro.f1, 1.0);
  EXPECT_EQ(report.categories.size(), 4u);
}

TEST(HypothesesTest, SyntheticCountsReachPublishedMacro) {
  const auto s = BuildHypotheses({49, 9, 0, 9}, {{HypothesisKind::kAuthorship, {7, 2, 0, 7}},
                                                 {HypothesisKind::kDating, {14, 2, 0, 7}},
                                                 {HypothesisKind::kLocation, {11, 1, 0, 5}}});
  const auto report = EvalHypotheses(s.pred, s.gold, s.matches, {});
  EXPECT_EQ(report.at("type").counts, (ConfusionCounts{49, 9, 0, 9}));
  EXPECT_EQ(report.at("creator").counts, (ConfusionCounts{7, 2, 0, 7}));
  EXPECT_EQ(report.at("date").counts, (ConfusionCounts{14, 2, 0, 7}));
  EXPECT_EQ(report.at("location").counts, (ConfusionCounts{11, 1, 0, 5}));
  EXPECT_NEAR(report.at("type").prf.f1, 0.845, 0.001);
  EXPECT_NEAR(report.macro.f1, 0.749, 0.001);
}

TEST(HypothesesTest, SinglePlantedErrorInTen) {
  auto s = BuildHypotheses({1, 0, 0, 0}, {{HypothesisKind::kDating, {10, 0, 0, 0}}});
  s.pred[0].hypotheses[4].target_text = "wrong century";
  const auto report = EvalHypotheses(s.pred, s.gold, s.matches, {});
  EXPECT_EQ(report.at("date").counts, (ConfusionCounts{9, 1, 0, 1}));
  EXPECT_NEAR(report.at("date").prf.f1, F(P(9, 1), R(9, 1)), 1e-12);
  // Motivation hypotheses have no column.
  s.pred[0].hypotheses.push_back({HypothesisKind::kMotivation, "money", std::nullopt, ConfidenceLevel::kHigh,
                                  Polarity::kPositive});
  EXPECT_EQ(EvalHypotheses(s.pred, s.gold, s.matches, {}).at("date").counts, (ConfusionCounts{9, 1, 0, 1}));
}

TEST(HypothesesTest, PolarityAndEquivalenceMatter) {
  auto s = BuildHypotheses({1, 0, 0, 0}, {{HypothesisKind::kDating, {1, 0, 0, 0}}});
  s.pred[0].hypotheses[0].polarity = Polarity::kNegative;
  EXPECT_EQ(EvalHypotheses(s.pred, s.gold, s.matches, {}).at("date").counts, (ConfusionCounts{0, 1, 0, 1}));
  s.pred[0].hypotheses[0].polarity = Polarity::kPositive;
  s.pred[0].hypotheses[0].target_text = "8th c.";
  s.gold[0].hypotheses[0].target_text = "8th century";
  EquivalenceList eq;
  eq.Add("hypothesis", "8th c.", "8th century");
  EXPECT_EQ(EvalHypotheses(s.pred, s.gold, s.matches, eq).at("date").counts, (ConfusionCounts{1, 0, 0, 0}));
}

class RehydrateTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new TempDir();
    ASSERT_EQ(sebikg::testing::RunFixtureExtract(dir_->str()).code, 0);
    ASSERT_EQ(sebikg::testing::RunFixtureMap(dir_->str()).code, 0);
  }
  static void TearDownTestSuite() { delete dir_; }
  static rdf::Graph Graph(const std::string& doc) {
    return rdf::ParseTurtleStar(text::ReadFile((dir_->path() / doc / (doc + ".ttl")).string()));
  }
  static TempDir* dir_;
};
TempDir* RehydrateTest::dir_ = nullptr;

TEST_F(RehydrateTest, OneBlockPerActInIriOrder) {
  const auto g = Graph("donation_of_constantine");
  const auto statements = Rehydrate(g);
  EXPECT_EQ(statements.size(), rdfgen::ComputeKgStats(g).interpretation_acts);
  bool found = false;
  for (const auto& s : statements) {
    if (s.rfind("Lorenzo Valla classified Donation of Constantine as Forgery", 0) == 0) {
      found = true;
      EXPECT_NE(s.find(" in 1439-1440"), std::string::npos) << s;
      EXPECT_NE(s.find("Evidence: philological arguments (language) evaluated for consistency: negative"),
                std::string::npos)
          << s;
      EXPECT_NE(s.find("Hypotheses: "), std::string::npos) << s;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(Rehydrate(g), statements);
  EXPECT_TRUE(Rehydrate(rdf::Graph(rdf::DefaultPrefixes())).empty());
}

TEST_F(RehydrateTest, MissingAgentIsAnError) {
  const auto g = Graph("getty_kouros");
  rdf::Graph broken(g.prefixes());
  const std::string attributed = g.Expand("prov:wasAttributedTo");
  for (const auto& t : g.triples()) {
    if (!(t.predicate.is_iri() && t.predicate.iri() == attributed)) broken.Add(t);
  }
  try {
    Rehydrate(broken);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRehydration);
  }
}

TEST(JudgeTest, ScoresAreNinths) {
  json fixtures = json::object();
  for (int k = 0; k <= 9; ++k) fixtures["judge/d" + std::to_string(k) + "/correctness"] = {{"score", k}};
  const llm::Gateway gateway({}, std::make_shared<llm::FixtureBackend>(fixtures));
  const auto prompts = llm::PromptLibrary::Default();
  const std::vector<std::string> gold = {"A classified X as Forgery."}, pred = {"A classified X as Authentic."};
  for (int k = 0; k <= 9; ++k) {
    EXPECT_DOUBLE_EQ(GevalJudge(pred, gold, Rubric::kCorrectness, gateway, prompts, "d" + std::to_string(k)), k / 9.0);
  }
  EXPECT_NEAR(GevalJudge(pred, gold, Rubric::kCorrectness, gateway, prompts, "d2"), 0.222, 0.001);
  EXPECT_NEAR(GevalJudge(pred, gold, Rubric::kCorrectness, gateway, prompts, "d8"), 0.889, 0.001);
  EXPECT_DOUBLE_EQ(GevalJudge(gold, gold, Rubric::kRepresentativeness, gateway, prompts, "none"), 1.0);
  EXPECT_EQ(RubricName(Rubric::kRepresentativeness), "representativeness");
}

TEST(JudgeTest, OutOfRangeRepliesAreFormatErrors) {
  const json fixtures = {{"judge/d/correctness", {{"score", 10}}}};
  const llm::Gateway gateway({}, std::make_shared<llm::FixtureBackend>(fixtures));
  try {
    GevalJudge(std::vector<std::string>{"a"}, std::vector<std::string>{"b"}, Rubric::kCorrectness, gateway,
               llm::PromptLibrary::Default(), "d");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kJudgeFormat);
  }
}

TEST(JudgeTest, RunGevalSummarizes) {
  const json fixtures = {{"judge/a/correctness", {{"score", 2}}}, {"judge/a/representativeness", {{"score", 3}}},
                         {"judge/b/correctness", {{"score", 8}}}, {"judge/b/representativeness", {{"score", 3}}}};
  const llm::Gateway gateway({}, std::make_shared<llm::FixtureBackend>(fixtures));
  const std::vector<GevalInput> docs = {{"a", {"p"}, {"g"}}, {"b", {"p"}, {"g"}}};
  const auto report = RunGeval(docs, gateway, llm::PromptLibrary::Default());
  EXPECT_DOUBLE_EQ(report.correctness.at("a"), 2 / 9.0);
  EXPECT_DOUBLE_EQ(report.correctness_summary.mean, 5 / 9.0);
  EXPECT_DOUBLE_EQ(report.correctness_summary.std_dev, 3 / 9.0);
  EXPECT_DOUBLE_EQ(report.correctness_summary.min, 2 / 9.0);
  EXPECT_DOUBLE_EQ(report.correctness_summary.max, 8 / 9.0);
  EXPECT_DOUBLE_EQ(report.representativeness_summary.std_dev, 0.0);
  const auto j = ToJson(report);
  EXPECT_TRUE(j.contains("correctness"));
}

TEST(ReportTest, JsonAndTable) {
  const auto report = Aggregate({{"title", {1, 0, 0, 0}}, {"date", {1, 1, 0, 1}}});
  const auto j = ToJson(report);
  EXPECT_EQ(j.at("categories").size(), 2u);
  EXPECT_EQ(j.at("categories")[1].at("counts").at("fp"), 1);
  const std::string table = FormatTable(report, "Metadata");
  EXPECT_NE(table.find("Metadata"), std::string::npos);
  EXPECT_NE(table.find("date"), std::string::npos);
  EXPECT_NE(table.find("0.500"), std::string::npos) << table;
}

}  // namespace
}  // namespace sebikg::eval
