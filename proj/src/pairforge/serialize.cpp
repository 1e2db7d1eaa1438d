#include "varm/pairforge/serialize.hpp"

#include <algorithm>

#include "varm/common/errors.hpp"
#include "varm/common/text.hpp"

namespace varm::pairforge {

std::size_t per_side_cap(std::size_t budget) { return (budget - 3) / 2; }

std::vector<std::string> attribute_fragments(const catalog::Product& product) {
  std::vector<std::string> out;
  out.reserve(product.attributes.size());
  for (const auto& a : product.attributes) out.push_back(a.key + ": " + a.value);
  return out;
}

std::string product_text(const catalog::Product& product) {
  auto fragments = attribute_fragments(product);
  return join(fragments, "; ");
}

std::vector<std::string> product_tokens(const catalog::Product& product,
                                        const Tokenizer& tokenizer) {
  std::vector<std::string> out;
  for (const auto& fragment : attribute_fragments(product)) {
    auto toks = tokenizer.tokenize(fragment);
    std::move(toks.begin(), toks.end(), std::back_inserter(out));
  }
  return out;
}

SerializedPair serialize_pair(const catalog::Product& left, const catalog::Product& right,
                              const Tokenizer& tokenizer, std::size_t budget) {
  if (budget < kMinTokenBudget) {
    throw InputError("token budget must be at least " + std::to_string(kMinTokenBudget) +
                     ", got " + std::to_string(budget));
  }
  const std::size_t cap = per_side_cap(budget);
  auto lt = product_tokens(left, tokenizer);
  auto rt = product_tokens(right, tokenizer);

  SerializedPair out;
  out.truncated_left = lt.size() > cap;
  out.truncated_right = rt.size() > cap;
  out.left_token_count = std::min(lt.size(), cap);
  out.right_token_count = std::min(rt.size(), cap);

  out.tokens.reserve(budget);
  out.tokens.emplace_back(kBosToken);
  out.tokens.insert(out.tokens.end(), lt.begin(), lt.begin() + out.left_token_count);
  out.tokens.emplace_back(kSepToken);
  out.tokens.insert(out.tokens.end(), rt.begin(), rt.begin() + out.right_token_count);
  out.tokens.emplace_back(kSepToken);
  out.tokens.resize(budget, kPadToken);
  return out;
}

}  // namespace varm::pairforge
