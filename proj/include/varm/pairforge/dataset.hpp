#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "varm/catalog/store.hpp"
#include "varm/pairforge/negatives.hpp"
#include "varm/pairforge/split.hpp"

namespace varm::pairforge {

enum class SamplerKind { kRandom, kInformed };

const char* to_string(SamplerKind kind);
SamplerKind parse_sampler(std::string_view s);  // throws InputError

// Everything needed to turn a catalog into a split pair dataset.
struct DatasetRecipe {
  SamplerKind sampler = SamplerKind::kInformed;
  NegativeMix mix;
  double negatives_per_positive = 1.0;
  double ratio = 0.7;
  bool balance = true;
};

struct BuiltDataset {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::map<std::string, std::size_t> bucket_tally;  // over the sampled negatives
  DatasetSplit split;
};

// Positives, then round(negatives_per_positive * positives) negatives from the
// chosen sampler, then the group-disjoint split. Pure in (store, recipe, seed).
BuiltDataset build_dataset(const catalog::CatalogStore& store, const DatasetRecipe& recipe,
                           std::uint64_t seed);

}  // namespace varm::pairforge
