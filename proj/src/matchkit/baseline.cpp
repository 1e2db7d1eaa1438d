#include "varm/matchkit/baseline.hpp"

#include <set>
#include <utility>

#include "varm/pairforge/tokenizer.hpp"

namespace varm::match {
namespace {

using TokenSet = std::set<std::pair<std::string, std::string>>;

TokenSet key_tokens(const catalog::Product& p) {
  static const pairforge::BasicTokenizer tokenizer;
  TokenSet out;
  for (const auto& a : p.attributes) {
    for (auto& tok : tokenizer.tokenize(a.value)) out.emplace(a.key, std::move(tok));
  }
  return out;
}

}  // namespace

BaselineResult baseline_similarity(const catalog::Product& left, const catalog::Product& right) {
  TokenSet l = key_tokens(left), r = key_tokens(right);
  if (l.empty() && r.empty()) return {0.0, left.attributes.empty() && right.attributes.empty()};
  std::size_t inter = 0;
  for (const auto& t : l) inter += r.count(t);
  std::size_t uni = l.size() + r.size() - inter;
  return {static_cast<double>(inter) / static_cast<double>(uni), false};
}

}  // namespace varm::match
