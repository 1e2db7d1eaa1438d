#pragma once

#include <vector>

#include "varm/catalog/store.hpp"
#include "varm/pairforge/labeled_pair.hpp"

namespace varm::pairforge {

// All unordered within-group pairs, ordered by group id then canonical pair.
// A group of n members yields n*(n-1)/2 pairs.
std::vector<LabeledPair> extract_positive_pairs(const catalog::CatalogStore& store);

}  // namespace varm::pairforge
