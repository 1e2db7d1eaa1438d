#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "varm/catalog/store.hpp"
#include "varm/evalkit/metrics.hpp"
#include "varm/matchkit/scorer.hpp"
#include "varm/pairforge/dataset.hpp"

namespace varm::eval {

using pairforge::SamplerKind;
using SamplerConfig = pairforge::DatasetRecipe;

struct CurvePoint {
  std::size_t train_size = 0;
  MetricsReport metrics;
  SamplerKind sampler = SamplerKind::kInformed;
  std::string backend_id;
};

// Called with each training subset before the eval split is scored. Backends
// that learn nothing (baseline, oracle) need no hook and give flat curves.
using TrainHook =
    std::function<void(std::span<const pairforge::LabeledPair> train, const catalog::CatalogStore&)>;

// Builds one dataset and split from (store, sampler, seed), then for each size
// trains on the first `size` pairs of a seeded shuffle of the train split and
// scores the fixed eval split. Throws InputError when sizes are not ascending
// and positive or a size exceeds the available train pairs.
std::vector<CurvePoint> learning_curve(const catalog::CatalogStore& store,
                                       const SamplerConfig& sampler,
                                       std::span<const std::size_t> sizes,
                                       const match::ClassifierHandle& backend, std::uint64_t seed,
                                       double threshold = match::kDefaultThreshold,
                                       const TrainHook& train = {}, std::size_t workers = 1);

}  // namespace varm::eval
