#include "varm/attrkit/heuristic.hpp"

#include <set>
#include <vector>

#include "varm/common/errors.hpp"
#include "varm/common/text.hpp"

namespace varm::attrs {

AttrLabels heuristic_labels(std::span<const catalog::Product* const> group) {
  if (group.size() < 2) {
    throw InputError("heuristic labeling needs at least 2 products, got " +
                     std::to_string(group.size()));
  }
  struct KeyStats {
    std::set<std::string> values;
    std::size_t holders = 0;
  };
  std::map<std::string, KeyStats, std::less<>> stats;
  for (const auto* p : group) {
    for (const auto& a : p->attributes) {
      auto& s = stats[a.key];
      s.values.insert(normalize_value(a.value));
      ++s.holders;
    }
  }
  const std::size_t n = group.size();
  AttrLabels out;
  for (const auto& [key, s] : stats) {
    std::size_t distinct = s.values.size() + (s.holders < n ? 1 : 0);
    // distinct / n > 0.9, kept in integers so the boundary is exact.
    out.emplace(key, 10 * distinct > 9 * n ? AttrLabel::kVariation : AttrLabel::kCommon);
  }
  return out;
}

AttrLabels heuristic_labels(std::span<const catalog::Product> group) {
  std::vector<const catalog::Product*> ptrs;
  ptrs.reserve(group.size());
  for (const auto& p : group) ptrs.push_back(&p);
  return heuristic_labels(std::span<const catalog::Product* const>(ptrs));
}

}  // namespace varm::attrs
