#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "varm/catalog/types.hpp"
#include "varm/pairforge/tokenizer.hpp"

namespace varm::pairforge {

inline constexpr std::size_t kDefaultTokenBudget = 512;
inline constexpr std::size_t kMinTokenBudget = 8;

inline constexpr const char* kBosToken = "[BOS]";
inline constexpr const char* kSepToken = "[SEP]";
inline constexpr const char* kPadToken = "[PAD]";

struct SerializedPair {
  std::vector<std::string> tokens;  // exactly `budget` symbols
  std::size_t left_token_count = 0;
  std::size_t right_token_count = 0;
  bool truncated_left = false;
  bool truncated_right = false;

  bool operator==(const SerializedPair&) const = default;
};

// Content tokens allowed per product: floor((budget - 3) / 2).
std::size_t per_side_cap(std::size_t budget);

// "key: value" for each attribute, in stored order.
std::vector<std::string> attribute_fragments(const catalog::Product& product);

// Fragments joined by "; "; the raw text shipped alongside token sequences.
std::string product_text(const catalog::Product& product);

std::vector<std::string> product_tokens(const catalog::Product& product,
                                        const Tokenizer& tokenizer);

// [BOS] left [SEP] right [SEP] [PAD]... with each side cut at per_side_cap().
// Unused room on one side is never handed to the other. Throws InputError
// when budget < kMinTokenBudget.
SerializedPair serialize_pair(const catalog::Product& left, const catalog::Product& right,
                              const Tokenizer& tokenizer,
                              std::size_t budget = kDefaultTokenBudget);

}  // namespace varm::pairforge
