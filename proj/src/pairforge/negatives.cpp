#include "varm/pairforge/negatives.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "varm/common/rng.hpp"

namespace varm::pairforge {
namespace {

using catalog::CatalogStore;
using catalog::Product;

bool same_present(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  return a && b && *a == *b;
}

// Consecutive rejected draws before the sampler switches to enumerating the
// bucket's pool exactly.
constexpr std::size_t kMaxRejections = 20000;

class PairSampler {
 public:
  PairSampler(const CatalogStore& store, std::span<const LabeledPair> positives)
      : store_(store) {
    for (const auto& p : positives) taken_.insert(pair_key(p.left_id, p.right_id));
    for (const auto& [id, p] : store.products()) {
      all_ids_.push_back(id);
      if (p.product_type) by_type_[*p.product_type].push_back(id);
    }
  }

  // Exact pool for one bucket, in canonical order.
  template <typename Pred>
  std::vector<std::pair<std::string, std::string>> enumerate(
      const std::vector<const std::vector<std::string>*>& blocks, Pred accept) const {
    std::vector<std::pair<std::string, std::string>> pool;
    for (const auto* block : blocks) {
      for (std::size_t i = 0; i < block->size(); ++i) {
        for (std::size_t j = i + 1; j < block->size(); ++j) {
          if (accept((*block)[i], (*block)[j])) pool.emplace_back((*block)[i], (*block)[j]);
        }
      }
    }
    return pool;
  }

  std::vector<LabeledPair> draw(Bucket bucket, std::size_t need, Rng& rng) {
    std::vector<LabeledPair> out;
    if (need == 0) return out;

    std::vector<const std::string*> anchors;
    std::vector<const std::vector<std::string>*> blocks;
    auto superset = [&](const Product& p) -> const std::vector<std::string>& {
      switch (bucket) {
        case Bucket::kHard: return store_.with_brand_type({p.brand, p.product_type});
        case Bucket::kMedium: return by_type_.at(*p.product_type);
        default: return all_ids_;
      }
    };
    for (const auto& [id, p] : store_.products()) {
      bool ok = bucket == Bucket::kHard    ? (p.brand && p.product_type)
                : bucket == Bucket::kMedium ? p.product_type.has_value()
                                             : true;
      if (ok) anchors.push_back(&id);
    }
    switch (bucket) {
      case Bucket::kHard:
        for (const auto& [key, ids] : store_.brand_type_index()) {
          if (key.first && key.second) blocks.push_back(&ids);
        }
        break;
      case Bucket::kMedium:
        for (const auto& [type, ids] : by_type_) blocks.push_back(&ids);
        break;
      default:
        blocks.push_back(&all_ids_);
    }

    auto accept = [&](const std::string& a, const std::string& b) {
      if (a == b) return false;
      auto cls = bucket == Bucket::kRandom ? random_ok(a, b) : classify_negative(store_, a, b);
      return cls == bucket && !taken_.contains(pair_key(a, b));
    };

    std::size_t rejections = 0;
    while (out.size() < need && !anchors.empty() && rejections < kMaxRejections) {
      const std::string& a = *anchors[rng.below(anchors.size())];
      const auto& partners = superset(store_.product(a));
      const std::string& b = partners[rng.below(partners.size())];
      if (!accept(a, b)) {
        ++rejections;
        continue;
      }
      rejections = 0;
      taken_.insert(pair_key(a, b));
      out.push_back(make_negative(a, b, bucket));
    }
    if (out.size() == need) return out;

    // Rejection stalled: the pool is small or nearly used up. Enumerate it.
    auto pool = enumerate(blocks, accept);
    std::size_t missing = need - out.size();
    if (pool.size() < missing) throw NegativePoolError(bucket, need, out.size() + pool.size());
    rng.shuffle(std::span(pool));
    for (std::size_t i = 0; i < missing; ++i) {
      taken_.insert(pair_key(pool[i].first, pool[i].second));
      out.push_back(make_negative(pool[i].first, pool[i].second, bucket));
    }
    return out;
  }

 private:
  std::optional<Bucket> random_ok(const std::string& a, const std::string& b) const {
    const std::string* ga = store_.group_of(a);
    const std::string* gb = store_.group_of(b);
    if (ga && gb && *ga == *gb) return std::nullopt;
    return Bucket::kRandom;
  }

  const CatalogStore& store_;
  std::unordered_set<std::string> taken_;
  std::vector<std::string> all_ids_;
  std::map<std::string, std::vector<std::string>, std::less<>> by_type_;
};

}  // namespace

NegativePoolError::NegativePoolError(Bucket bucket, std::size_t requested, std::size_t available)
    : InputError(available == 0
                     ? std::string("negative bucket '") + to_string(bucket) +
                           "' has no candidate pairs but " + std::to_string(requested) +
                           " were requested"
                     : std::string("negative bucket '") + to_string(bucket) + "' can supply " +
                           std::to_string(available) + " distinct pairs but " +
                           std::to_string(requested) + " were requested"),
      bucket_(bucket) {}

void validate(const NegativeMix& mix) {
  std::vector<std::string> bad;
  if (mix.hard < 0 || mix.medium < 0 || mix.easy < 0) {
    bad.push_back("mix: fractions must be non-negative");
  }
  double sum = mix.hard + mix.medium + mix.easy;
  if (std::abs(sum - 1.0) > 1e-9) {
    bad.push_back("mix: fractions must sum to 1 (got " + std::to_string(sum) + ")");
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

BucketCounts allocate(const NegativeMix& mix, std::size_t count) {
  validate(mix);
  auto n = static_cast<double>(count);
  BucketCounts c;
  c.medium = static_cast<std::size_t>(std::llround(n * mix.medium));
  c.easy = static_cast<std::size_t>(std::llround(n * mix.easy));
  // Rounding both up can overshoot by one; take it back from the easiest.
  while (c.medium + c.easy > count) {
    if (c.easy > 0) --c.easy;
    else --c.medium;
  }
  c.hard = count - c.medium - c.easy;
  return c;
}

std::optional<Bucket> classify_negative(const CatalogStore& store, std::string_view a,
                                        std::string_view b) {
  if (a == b) return std::nullopt;
  const Product& pa = store.product(a);
  const Product& pb = store.product(b);
  const std::string* ga = store.group_of(a);
  const std::string* gb = store.group_of(b);
  if (ga && gb && *ga == *gb) return std::nullopt;

  bool same_brand = same_present(pa.brand, pb.brand);
  bool same_type = same_present(pa.product_type, pb.product_type);
  if (same_brand && same_type) return Bucket::kHard;
  if (same_type) return Bucket::kMedium;
  if (!same_brand) return Bucket::kEasy;
  return std::nullopt;
}

std::vector<LabeledPair> sample_negatives(const CatalogStore& store,
                                          std::span<const LabeledPair> positives,
                                          const NegativeMix& mix, std::size_t count,
                                          std::uint64_t seed) {
  BucketCounts counts = allocate(mix, count);
  PairSampler sampler(store, positives);
  std::vector<LabeledPair> out;
  out.reserve(count);
  for (auto [bucket, need] : {std::pair{Bucket::kHard, counts.hard},
                              std::pair{Bucket::kMedium, counts.medium},
                              std::pair{Bucket::kEasy, counts.easy}}) {
    Rng rng = Rng::derive(seed, std::string("negatives/") + to_string(bucket));
    auto drawn = sampler.draw(bucket, need, rng);
    std::move(drawn.begin(), drawn.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<LabeledPair> sample_random_negatives(const CatalogStore& store,
                                                 std::span<const LabeledPair> positives,
                                                 std::size_t count, std::uint64_t seed) {
  PairSampler sampler(store, positives);
  Rng rng = Rng::derive(seed, "negatives/random");
  return sampler.draw(Bucket::kRandom, count, rng);
}

}  // namespace varm::pairforge
