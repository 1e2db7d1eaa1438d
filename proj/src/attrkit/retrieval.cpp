#include "varm/attrkit/retrieval.hpp"

#include <algorithm>
#include <set>

#include "varm/attrkit/heuristic.hpp"
#include "varm/common/text.hpp"

namespace varm::attrs {

std::vector<std::string> group_variation_keys(const catalog::CatalogStore& store,
                                              const catalog::VariationGroup& group) {
  if (group.gold_variation_keys) return *group.gold_variation_keys;
  if (group.member_ids.size() < 2) return {};
  auto members = store.members(group);
  std::vector<std::string> out;
  for (const auto& [key, label] : heuristic_labels(std::span<const catalog::Product* const>(members))) {
    if (label == AttrLabel::kVariation) out.push_back(key);
  }
  return out;
}

RagContext retrieve_variation_context(const catalog::CatalogStore& store,
                                      std::string_view product_type, std::string_view brand,
                                      std::span<const std::string> exclude_members) {
  std::set<std::string, std::less<>> excluded(exclude_members.begin(), exclude_members.end());
  std::set<std::string> by_type, by_brand;

  for (const auto& [gid, group] : store.groups()) {
    bool type_hit = false, brand_hit = false, self = false;
    for (const auto& m : group.member_ids) {
      if (excluded.contains(m)) {
        self = true;
        break;
      }
      const auto& p = store.product(m);
      type_hit |= !product_type.empty() && p.product_type && *p.product_type == product_type;
      brand_hit |= !brand.empty() && p.brand && *p.brand == brand;
    }
    if (self || (!type_hit && !brand_hit)) continue;
    for (auto& key : group_variation_keys(store, group)) {
      std::string k = normalize_key(key);
      if (type_hit) by_type.insert(k);
      if (brand_hit) by_brand.insert(k);
    }
  }
  return {std::string(product_type), std::string(brand),
          std::vector<std::string>(by_type.begin(), by_type.end()),
          std::vector<std::string>(by_brand.begin(), by_brand.end())};
}

}  // namespace varm::attrs
