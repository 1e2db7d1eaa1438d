#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace varm::pairforge {

enum class PairLabel { kVariantMatch, kMismatch };

// Provenance of a pair. Informed negatives are hard/medium/easy; random
// negatives come from the uninformed control sampler.
enum class Bucket { kPositive, kHard, kMedium, kEasy, kRandom };

struct LabeledPair {
  std::string left_id;  // lexicographically smaller id
  std::string right_id;
  PairLabel label = PairLabel::kMismatch;
  Bucket bucket = Bucket::kRandom;
  std::optional<std::string> origin_group;

  bool operator==(const LabeledPair&) const = default;
};

LabeledPair make_positive(std::string a, std::string b, std::string group_id);
LabeledPair make_negative(std::string a, std::string b, Bucket bucket);

// Order-independent identity of the pair, usable as a hash key.
std::string pair_key(std::string_view a, std::string_view b);

const char* to_string(PairLabel label);
const char* to_string(Bucket bucket);
PairLabel parse_label(std::string_view s);   // throws InputError
Bucket parse_bucket(std::string_view s);     // throws InputError

}  // namespace varm::pairforge
