#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "varm/matchkit/score.hpp"

namespace varm::eval {

using pairforge::PairLabel;

// variant_match is the positive class.
struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionCounts&) const = default;
};

struct MetricsReport {
  std::optional<double> auroc;
  double accuracy = 0, precision = 0, recall = 0, f1 = 0;
  std::size_t n = 0;
  std::string config_digest;
  // A zero denominator reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
};

// Throws InputError on a length mismatch.
ConfusionCounts confusion(std::span<const match::MatchVerdict> verdicts,
                          std::span<const PairLabel> gold);

// Throws InputError when the counts are empty.
MetricsReport basic_metrics(const ConfusionCounts& counts);

// Thresholded metrics plus AUROC over the raw probabilities. A score that
// carries its own verdict (generative backends) is counted by that verdict.
// AUROC is left unset when a class is absent.
MetricsReport evaluate_scores(std::span<const match::MatchScore> scores,
                              std::span<const PairLabel> gold,
                              double threshold = match::kDefaultThreshold);

}  // namespace varm::eval
