#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varm/catalog/store.hpp"

namespace varm::attrs {

struct RagContext {
  std::string product_type;
  std::string brand;
  std::vector<std::string> type_variation_attrs;   // sorted, unique
  std::vector<std::string> brand_variation_attrs;  // sorted, unique

  bool operator==(const RagContext&) const = default;
};

// Variation keys recorded for a group: its gold keys when present, otherwise
// the heuristic's variation labels (empty for singletons).
std::vector<std::string> group_variation_keys(const catalog::CatalogStore& store,
                                              const catalog::VariationGroup& group);

// Collects the variation keys of every group with a member of the given
// product type (resp. brand). Groups containing any of `exclude_members` are
// skipped so a query group never sees its own labels.
RagContext retrieve_variation_context(const catalog::CatalogStore& store,
                                      std::string_view product_type, std::string_view brand,
                                      std::span<const std::string> exclude_members = {});

}  // namespace varm::attrs
