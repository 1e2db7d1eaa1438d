#include "varm/pairforge/dataset.hpp"

#include <cmath>

#include "varm/common/errors.hpp"
#include "varm/pairforge/positives.hpp"

namespace varm::pairforge {

const char* to_string(SamplerKind kind) {
  return kind == SamplerKind::kRandom ? "random" : "informed";
}

SamplerKind parse_sampler(std::string_view s) {
  if (s == "random") return SamplerKind::kRandom;
  if (s == "informed") return SamplerKind::kInformed;
  throw InputError("unknown sampler '" + std::string(s) + "' (expected random or informed)");
}

BuiltDataset build_dataset(const catalog::CatalogStore& store, const DatasetRecipe& recipe,
                           std::uint64_t seed) {
  if (!(recipe.negatives_per_positive >= 0)) {
    throw ValidationError({"negatives_per_positive: must be >= 0"});
  }
  auto pairs = extract_positive_pairs(store);
  BuiltDataset out;
  out.positives = pairs.size();
  auto count = static_cast<std::size_t>(
      std::llround(recipe.negatives_per_positive * static_cast<double>(pairs.size())));
  auto negatives = recipe.sampler == SamplerKind::kInformed
                       ? sample_negatives(store, pairs, recipe.mix, count, seed)
                       : sample_random_negatives(store, pairs, count, seed);
  out.negatives = negatives.size();
  for (const auto& n : negatives) ++out.bucket_tally[to_string(n.bucket)];
  pairs.insert(pairs.end(), negatives.begin(), negatives.end());
  out.split = split_dataset(store, pairs, recipe.ratio, seed, {recipe.balance});
  return out;
}

}  // namespace varm::pairforge
