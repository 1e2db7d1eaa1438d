#include "varm/evalkit/curve.hpp"

#include <algorithm>

#include "varm/common/errors.hpp"
#include "varm/common/rng.hpp"

namespace varm::eval {

std::vector<CurvePoint> learning_curve(const catalog::CatalogStore& store,
                                       const SamplerConfig& sampler,
                                       std::span<const std::size_t> sizes,
                                       const match::ClassifierHandle& backend, std::uint64_t seed,
                                       double threshold, const TrainHook& train,
                                       std::size_t workers) {
  if (sizes.empty()) throw InputError("learning curve needs at least one train size");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw InputError("train size 0 is not allowed");
    if (i && sizes[i] < sizes[i - 1]) throw InputError("train sizes must be ascending");
  }

  auto dataset = pairforge::build_dataset(store, sampler, seed);
  auto train_pool = dataset.split.train;
  for (auto s : sizes) {
    if (s > train_pool.size()) {
      throw InputError("train size " + std::to_string(s) + " exceeds the " +
                       std::to_string(train_pool.size()) + " available training pairs");
    }
  }
  Rng rng = Rng::derive(seed, "learning_curve/train_order");
  rng.shuffle(std::span(train_pool));

  const auto& eval_pairs = dataset.split.eval;
  std::vector<PairLabel> gold;
  gold.reserve(eval_pairs.size());
  for (const auto& p : eval_pairs) gold.push_back(p.label);

  std::vector<CurvePoint> out;
  for (auto s : sizes) {
    if (train) train(std::span(train_pool).first(s), store);
    auto results = match::score_pairs(backend, store, eval_pairs, workers);
    std::vector<match::MatchScore> scores;
    std::vector<PairLabel> kept_gold;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i].score) continue;
      scores.push_back(*results[i].score);
      kept_gold.push_back(gold[i]);
    }
    CurvePoint point;
    point.train_size = s;
    point.sampler = sampler.sampler;
    point.backend_id = match::backend_id(backend);
    point.metrics = evaluate_scores(scores, kept_gold, threshold);
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace varm::eval
