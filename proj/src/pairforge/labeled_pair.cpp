#include "varm/pairforge/labeled_pair.hpp"

#include "varm/common/errors.hpp"

namespace varm::pairforge {
namespace {

std::pair<std::string, std::string> canonical(std::string a, std::string b) {
  if (a == b) throw InputError("a pair needs two distinct products, got '" + a + "' twice");
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

LabeledPair make_positive(std::string a, std::string b, std::string group_id) {
  auto [l, r] = canonical(std::move(a), std::move(b));
  return {std::move(l), std::move(r), PairLabel::kVariantMatch, Bucket::kPositive,
          std::move(group_id)};
}

LabeledPair make_negative(std::string a, std::string b, Bucket bucket) {
  if (bucket == Bucket::kPositive) throw InputError("a negative cannot use the positive bucket");
  auto [l, r] = canonical(std::move(a), std::move(b));
  return {std::move(l), std::move(r), PairLabel::kMismatch, bucket, std::nullopt};
}

std::string pair_key(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  std::string key;
  key.reserve(a.size() + b.size() + 1);
  key.append(a);
  key.push_back('\0');
  key.append(b);
  return key;
}

const char* to_string(PairLabel label) {
  return label == PairLabel::kVariantMatch ? "variant_match" : "mismatch";
}

const char* to_string(Bucket bucket) {
  switch (bucket) {
    case Bucket::kPositive: return "positive";
    case Bucket::kHard: return "hard";
    case Bucket::kMedium: return "medium";
    case Bucket::kEasy: return "easy";
    case Bucket::kRandom: return "random";
  }
  return "random";
}

PairLabel parse_label(std::string_view s) {
  if (s == "variant_match") return PairLabel::kVariantMatch;
  if (s == "mismatch") return PairLabel::kMismatch;
  throw InputError("unknown pair label '" + std::string(s) + "'");
}

Bucket parse_bucket(std::string_view s) {
  for (Bucket b : {Bucket::kPositive, Bucket::kHard, Bucket::kMedium, Bucket::kEasy,
                   Bucket::kRandom}) {
    if (s == to_string(b)) return b;
  }
  throw InputError("unknown bucket '" + std::string(s) + "'");
}

}  // namespace varm::pairforge
