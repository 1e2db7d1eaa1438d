#include "varm/evalkit/metrics.hpp"

#include <vector>

#include "varm/common/errors.hpp"
#include "varm/evalkit/auroc.hpp"

namespace varm::eval {

ConfusionCounts confusion(std::span<const match::MatchVerdict> verdicts,
                          std::span<const PairLabel> gold) {
  if (verdicts.size() != gold.size()) {
    throw InputError("confusion: " + std::to_string(verdicts.size()) + " verdicts vs " +
                     std::to_string(gold.size()) + " gold labels");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    bool predicted = verdicts[i].label == PairLabel::kVariantMatch;
    bool actual = gold[i] == PairLabel::kVariantMatch;
    if (predicted && actual) ++c.tp;
    else if (predicted) ++c.fp;
    else if (actual) ++c.fn;
    else ++c.tn;
  }
  return c;
}

MetricsReport basic_metrics(const ConfusionCounts& c) {
  if (c.total() == 0) throw InputError("metrics need at least one evaluated pair");
  MetricsReport r;
  r.n = c.total();
  r.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(r.n);
  if (c.tp + c.fp == 0) r.precision_undefined = true;
  else r.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  if (c.tp + c.fn == 0) r.recall_undefined = true;
  else r.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  if (r.precision + r.recall > 0) r.f1 = 2 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

MetricsReport evaluate_scores(std::span<const match::MatchScore> scores,
                              std::span<const PairLabel> gold, double threshold) {
  if (scores.size() != gold.size()) {
    throw InputError("evaluate: " + std::to_string(scores.size()) + " scores vs " +
                     std::to_string(gold.size()) + " gold labels");
  }
  std::vector<match::MatchVerdict> verdicts;
  std::vector<double> probs;
  verdicts.reserve(scores.size());
  probs.reserve(scores.size());
  bool has_pos = false, has_neg = false;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    verdicts.push_back(scores[i].verdict ? *scores[i].verdict : match::classify(scores[i], threshold));
    probs.push_back(scores[i].probability);
    (gold[i] == PairLabel::kVariantMatch ? has_pos : has_neg) = true;
  }
  MetricsReport r = basic_metrics(confusion(verdicts, gold));
  if (has_pos && has_neg) r.auroc = auroc(probs, gold);
  return r;
}

}  // namespace varm::eval
