#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "varm/catalog/store.hpp"
#include "varm/pairforge/labeled_pair.hpp"

namespace varm::pairforge {

struct SplitOptions {
  // Downsample the majority label inside each split so both labels are equal.
  // Only applies when the input holds both labels.
  bool balance = true;
};

struct DatasetSplit {
  std::vector<LabeledPair> train;
  std::vector<LabeledPair> eval;
  std::uint64_t seed = 0;
  double ratio = 0.7;

  std::vector<std::string> train_groups;  // sorted
  std::vector<std::string> eval_groups;   // sorted
  std::size_t dropped_cross_split = 0;    // negatives straddling the split
  std::size_t dropped_for_balance = 0;

  double train_fraction() const;
};

// Group-disjoint split. The splitting unit is the variation group (an
// ungrouped product is its own unit); a negative follows its products' units
// and is dropped when they land on different sides. Unit assignment is
// searched so that the retained train share approaches `ratio`.
// Throws InputError for ratio outside (0,1) or fewer than two units.
DatasetSplit split_dataset(const catalog::CatalogStore& store,
                           std::span<const LabeledPair> pairs, double ratio,
                           std::uint64_t seed, SplitOptions options = {});

}  // namespace varm::pairforge
