#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "varm/attrkit/labels.hpp"

namespace varm::eval {

struct RecallResult {
  std::optional<double> recall;  // empty when the filtered gold set is empty
  std::size_t matched = 0;
  std::size_t gold_size = 0;
  // (gold, predicted) names within edit distance 2 that did not match
  // exactly. Reported for inspection only; they never count as hits.
  std::vector<std::pair<std::string, std::string>> near_misses;
};

// |predicted ∩ gold| / |gold| after key normalization, optionally restricting
// gold to `filter`. Extra predictions are never penalized.
RecallResult variation_recall(std::span<const std::string> predicted,
                              std::span<const std::string> gold,
                              std::optional<std::span<const std::string>> filter = std::nullopt);

// Mean recall over groups, with skipped groups tallied separately.
struct RecallTally {
  double sum = 0;
  std::size_t groups = 0;
  std::size_t skipped = 0;

  void add(const RecallResult& r);
  std::optional<double> mean() const;
};

struct ClassAccuracy {
  std::size_t correct = 0;
  std::size_t total = 0;

  std::optional<double> accuracy() const;
};

struct AttrAccuracy {
  ClassAccuracy common;
  ClassAccuracy variation;
  ClassAccuracy overall;
};

// Scored over gold keys only; a gold key missing from `predicted` is wrong.
// Throws InputError for an empty gold map.
AttrAccuracy attr_accuracy(const attrs::AttrLabels& predicted, const attrs::AttrLabels& gold);

}  // namespace varm::eval
