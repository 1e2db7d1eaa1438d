#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "varm/catalog/synth.hpp"
#include "varm/common/errors.hpp"
#include "varm/common/rng.hpp"
#include "varm/evalkit/attr_metrics.hpp"
#include "varm/evalkit/auroc.hpp"
#include "varm/evalkit/curve.hpp"
#include "varm/evalkit/metrics.hpp"
#include "varm/evalkit/report.hpp"

namespace varm::eval {
namespace {

using attrs::AttrLabel;
using match::MatchScore;
using match::MatchVerdict;

constexpr auto kPos = PairLabel::kVariantMatch;
constexpr auto kNeg = PairLabel::kMismatch;

TEST(Auroc, WorkedExample) {
  std::vector<double> s = {0.9, 0.4, 0.6, 0.1};
  std::vector<PairLabel> g = {kPos, kPos, kNeg, kNeg};
  EXPECT_DOUBLE_EQ(auroc(s, g), 0.75);
}

TEST(Auroc, SeparatedAndAllTied) {
  std::vector<PairLabel> g = {kNeg, kPos, kNeg, kPos};
  EXPECT_DOUBLE_EQ(auroc(std::vector<double>{0.1, 0.8, 0.2, 0.9}, g), 1.0);
  EXPECT_DOUBLE_EQ(auroc(std::vector<double>{0.3, 0.3, 0.3, 0.3}, g), 0.5);
}

TEST(Auroc, MatchesBruteForceWithTies) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + rng.below(60);
    std::vector<double> s(n);
    std::vector<PairLabel> g(n);
    std::vector<bool> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = static_cast<double>(rng.below(6)) / 5.0;
      pos[i] = i < 1 || (i > 1 && rng.below(2) == 0);
      g[i] = pos[i] ? kPos : kNeg;
    }
    EXPECT_EQ(auroc(s, g), testing::oracle::auroc(s, pos));
  }
}

TEST(Auroc, Errors) {
  EXPECT_THROW(auroc(std::vector<double>{0.1, 0.2}, std::vector<PairLabel>{kPos, kPos}), InputError);
  EXPECT_THROW(auroc(std::vector<double>{0.1}, std::vector<PairLabel>{kPos, kNeg}), InputError);
  EXPECT_THROW(auroc(std::vector<double>{NAN, 0.2}, std::vector<PairLabel>{kPos, kNeg}), InputError);
}

std::vector<MatchVerdict> verdicts_of(std::initializer_list<PairLabel> labels) {
  std::vector<MatchVerdict> v;
  for (auto l : labels) v.push_back({l, 0.0, false});
  return v;
}

TEST(Confusion, CorrectAndInverted) {
  std::vector<PairLabel> gold = {kPos, kPos, kNeg, kNeg};
  EXPECT_EQ(confusion(verdicts_of({kPos, kPos, kNeg, kNeg}), gold), (ConfusionCounts{2, 0, 0, 2}));
  EXPECT_EQ(confusion(verdicts_of({kNeg, kNeg, kPos, kPos}), gold), (ConfusionCounts{0, 2, 2, 0}));
  EXPECT_THROW(confusion(verdicts_of({kPos}), gold), InputError);
}

TEST(Confusion, TwentyPairFixture) {
  std::vector<MatchVerdict> v;
  std::vector<PairLabel> gold;
  auto add = [&](PairLabel predicted, PairLabel truth, int n) {
    for (int i = 0; i < n; ++i) {
      v.push_back({predicted, 0.0, false});
      gold.push_back(truth);
    }
  };
  add(kPos, kPos, 8);
  add(kPos, kNeg, 2);
  add(kNeg, kPos, 4);
  add(kNeg, kNeg, 6);
  auto c = confusion(v, gold);
  EXPECT_EQ(c, (ConfusionCounts{8, 2, 4, 6}));
  auto m = basic_metrics(c);
  EXPECT_DOUBLE_EQ(m.precision, 0.8);
  EXPECT_DOUBLE_EQ(m.recall, 8.0 / 12.0);
  EXPECT_DOUBLE_EQ(m.accuracy, 0.7);
  EXPECT_NEAR(m.f1, 0.7273, 5e-5);
  EXPECT_DOUBLE_EQ(m.f1, 2 * 0.8 * (8.0 / 12.0) / (0.8 + 8.0 / 12.0));
  EXPECT_FALSE(m.auroc);
  EXPECT_EQ(m.n, 20u);
}

TEST(Metrics, DegenerateDenominators) {
  auto m = basic_metrics({0, 0, 3, 1});
  EXPECT_DOUBLE_EQ(m.precision, 0.0);
  EXPECT_TRUE(m.precision_undefined);
  EXPECT_FALSE(m.recall_undefined);
  EXPECT_DOUBLE_EQ(m.f1, 0.0);
  EXPECT_TRUE(basic_metrics({0, 1, 0, 1}).recall_undefined);
  EXPECT_THROW(basic_metrics({}), InputError);
  auto p = basic_metrics({3, 0, 0, 3});
  EXPECT_DOUBLE_EQ(p.accuracy * p.precision * p.recall * p.f1, 1.0);
}

TEST(Metrics, EvaluateScoresUsesVerdictWhenPresent) {
  std::vector<MatchScore> s(4);
  s[0].probability = 0.9;
  s[1].probability = 0.2;
  s[1].verdict = MatchVerdict{kPos, 0.2, false};
  s[2].probability = 0.3;
  s[3].probability = 0.7;
  std::vector<PairLabel> gold = {kPos, kPos, kNeg, kNeg};
  auto m = evaluate_scores(s, gold, 0.5);
  EXPECT_DOUBLE_EQ(m.accuracy, 0.75);
  ASSERT_TRUE(m.auroc);
  EXPECT_DOUBLE_EQ(*m.auroc, 0.5);
  std::vector<PairLabel> one_class = {kPos, kPos, kPos, kPos};
  EXPECT_FALSE(evaluate_scores(s, one_class).auroc);
}

TEST(Recall, StatedExamples) {
  std::vector<std::string> gold = {"color", "size"};
  EXPECT_DOUBLE_EQ(*variation_recall(std::vector<std::string>{"color", "size", "style"}, gold).recall, 1.0);
  EXPECT_DOUBLE_EQ(*variation_recall(std::vector<std::string>{"Color"}, gold).recall, 0.5);
  auto r = variation_recall(std::vector<std::string>{"flavour"}, std::vector<std::string>{"flavor"});
  EXPECT_DOUBLE_EQ(*r.recall, 0.0);
  ASSERT_EQ(r.near_misses.size(), 1u);
  EXPECT_EQ(r.near_misses[0], (std::pair<std::string, std::string>{"flavor", "flavour"}));
}

TEST(Recall, FilterAndSkip) {
  std::vector<std::string> gold = {"color", "size", "metal"};
  std::vector<std::string> cs = {"color", "size"};
  auto r = variation_recall(std::vector<std::string>{"size", "metal"}, gold, std::span<const std::string>(cs));
  EXPECT_DOUBLE_EQ(*r.recall, 0.5);
  EXPECT_EQ(r.gold_size, 2u);
  std::vector<std::string> other = {"flavor"};
  auto skipped = variation_recall(std::vector<std::string>{"size"}, other, std::span<const std::string>(cs));
  EXPECT_FALSE(skipped.recall);
  RecallTally tally;
  tally.add(r);
  tally.add(skipped);
  tally.add(variation_recall(std::vector<std::string>{"size"}, std::vector<std::string>{"size"}));
  EXPECT_EQ(tally.skipped, 1u);
  EXPECT_DOUBLE_EQ(*tally.mean(), 0.75);
  EXPECT_FALSE(RecallTally{}.mean());
}

TEST(AttrAccuracy, Examples) {
  attrs::AttrLabels gold = {{"a", AttrLabel::kCommon},    {"b", AttrLabel::kCommon},
                            {"c", AttrLabel::kCommon},    {"d", AttrLabel::kCommon},
                            {"e", AttrLabel::kVariation}, {"f", AttrLabel::kVariation},
                            {"g", AttrLabel::kVariation}, {"h", AttrLabel::kVariation}};
  auto all = attr_accuracy(gold, gold);
  EXPECT_DOUBLE_EQ(*all.overall.accuracy(), 1.0);
  auto missing = gold;
  missing.erase("h");
  missing["extra"] = AttrLabel::kVariation;
  auto acc = attr_accuracy(missing, gold);
  EXPECT_DOUBLE_EQ(*acc.variation.accuracy(), 0.75);
  EXPECT_DOUBLE_EQ(*acc.common.accuracy(), 1.0);
  EXPECT_EQ(acc.overall.total, 8u);
  EXPECT_THROW(attr_accuracy(gold, {}), InputError);
}

TEST(AttrAccuracy, TenKeysSevenRight) {
  attrs::AttrLabels gold, predicted;
  for (int i = 0; i < 10; ++i) {
    auto k = "k" + std::to_string(i);
    gold[k] = i % 2 ? AttrLabel::kCommon : AttrLabel::kVariation;
    if (i < 7) predicted[k] = gold[k];
    else if (i < 9) predicted[k] = i % 2 ? AttrLabel::kVariation : AttrLabel::kCommon;
  }
  EXPECT_DOUBLE_EQ(*attr_accuracy(predicted, gold).overall.accuracy(), 0.7);
}

catalog::CatalogStore curve_store() {
  catalog::SynthSpec spec;
  spec.groups_per_brand = 10;
  return catalog::synth_catalog(spec, 4);
}

TEST(Curve, OracleSinglePoint) {
  auto store = curve_store();
  std::vector<std::size_t> sizes = {10};
  match::ClassifierHandle h = match::OracleBackend{match::OracleTable::from_store(store)};
  auto points = learning_curve(store, SamplerConfig{}, sizes, h, 3);
  ASSERT_EQ(points.size(), 1u);
  EXPECT_EQ(*points[0].metrics.auroc, 1.0);
  EXPECT_EQ(points[0].backend_id, "oracle");
}

TEST(Curve, BaselineIsFlatAndHookSeesPrefixes) {
  auto store = curve_store();
  std::vector<std::size_t> sizes = {4, 8, 16};
  std::vector<std::vector<pairforge::LabeledPair>> seen;
  TrainHook hook = [&](std::span<const pairforge::LabeledPair> train, const catalog::CatalogStore&) {
    seen.emplace_back(train.begin(), train.end());
  };
  auto points = learning_curve(store, SamplerConfig{}, sizes, match::BaselineBackend{}, 3, 0.5, hook);
  ASSERT_EQ(points.size(), 3u);
  EXPECT_EQ(points[0].metrics.auroc, points[2].metrics.auroc);
  EXPECT_EQ(points[0].metrics.f1, points[1].metrics.f1);
  ASSERT_EQ(seen.size(), 3u);
  EXPECT_TRUE(std::equal(seen[0].begin(), seen[0].end(), seen[2].begin()));
}

TEST(Curve, RejectsBadSizes) {
  auto store = curve_store();
  match::ClassifierHandle h = match::BaselineBackend{};
  std::vector<std::size_t> descending = {8, 4}, zero = {0}, huge = {1000000};
  EXPECT_THROW(learning_curve(store, {}, descending, h, 1), InputError);
  EXPECT_THROW(learning_curve(store, {}, zero, h, 1), InputError);
  try {
    learning_curve(store, {}, huge, h, 1);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("1000000"), std::string::npos);
  }
}

TEST(Report, CsvShapes) {
  MetricsReport m = basic_metrics({1, 0, 0, 1});
  m.config_digest = "abc";
  EXPECT_EQ(metrics_csv_header(), "experiment,config_digest,seed,n,auroc,accuracy,precision,recall,f1,skipped");
  EXPECT_EQ(metrics_csv_row("e1", m, 7, 0), "e1,abc,7,2,,1.000000,1.000000,1.000000,1.000000,0");
  m.auroc = 0.5;
  EXPECT_EQ(to_json(m)["auroc"], 0.5);
  CurvePoint p{10, m, SamplerKind::kRandom, "baseline"};
  EXPECT_EQ(curve_csv_row(p, 3), "10,random,baseline,2,0.500000,1.000000,1.000000,1.000000,1.000000,abc,3");
}

}  // namespace
}  // namespace varm::eval
