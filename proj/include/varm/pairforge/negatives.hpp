#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "varm/catalog/store.hpp"
#include "varm/common/errors.hpp"
#include "varm/pairforge/labeled_pair.hpp"

namespace varm::pairforge {

// Requested share of each informed bucket. Must be non-negative and sum to 1.
struct NegativeMix {
  double hard = 1.0 / 3.0;
  double medium = 1.0 / 3.0;
  double easy = 1.0 / 3.0;
};

struct BucketCounts {
  std::size_t hard = 0;
  std::size_t medium = 0;
  std::size_t easy = 0;

  std::size_t total() const { return hard + medium + easy; }
  bool operator==(const BucketCounts&) const = default;
};

void validate(const NegativeMix& mix);  // throws ValidationError naming "mix"

// medium and easy get round(count * fraction); hard takes the remainder.
BucketCounts allocate(const NegativeMix& mix, std::size_t count);

// Bucket a non-matching pair belongs to, or nullopt when the pair is in the
// same group or fits no bucket (same brand, different type). Buckets are
// exclusive with priority hard > medium > easy. A missing brand or type
// never equals anything.
std::optional<Bucket> classify_negative(const catalog::CatalogStore& store,
                                        std::string_view a, std::string_view b);

// Raised when a bucket cannot supply its requested count.
class NegativePoolError : public InputError {
 public:
  NegativePoolError(Bucket bucket, std::size_t requested, std::size_t available);

  Bucket bucket() const { return bucket_; }

 private:
  Bucket bucket_;
};

// Informed sampler. Each negative keeps one product of the catalog as anchor
// and swaps in a partner drawn from the bucket's candidate pool. Output is
// hard, then medium, then easy; never repeats a pair or a positive.
std::vector<LabeledPair> sample_negatives(const catalog::CatalogStore& store,
                                          std::span<const LabeledPair> positives,
                                          const NegativeMix& mix, std::size_t count,
                                          std::uint64_t seed);

// Uninformed control: uniformly random cross-group pairs, bucket = random.
std::vector<LabeledPair> sample_random_negatives(const catalog::CatalogStore& store,
                                                 std::span<const LabeledPair> positives,
                                                 std::size_t count, std::uint64_t seed);

}  // namespace varm::pairforge
