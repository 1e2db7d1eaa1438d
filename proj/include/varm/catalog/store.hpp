#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varm/catalog/types.hpp"

namespace varm::catalog {

// Index key; a missing brand or product type is its own bucket.
using BrandType = std::pair<std::optional<std::string>, std::optional<std::string>>;

// Immutable after construction through CatalogBuilder, so concurrent readers
// need no synchronization.
class CatalogStore {
 public:
  using ProductMap = std::map<std::string, Product, std::less<>>;
  using GroupMap = std::map<std::string, VariationGroup, std::less<>>;

  const ProductMap& products() const { return products_; }
  const GroupMap& groups() const { return groups_; }

  const Product* find_product(std::string_view id) const;
  const Product& product(std::string_view id) const;  // throws InputError
  const VariationGroup* find_group(std::string_view id) const;

  // Group containing the product, if any.
  const std::string* group_of(std::string_view product_id) const;

  // Sorted product ids sharing (brand, product_type); empty if none.
  const std::vector<std::string>& with_brand_type(const BrandType& key) const;
  const std::map<BrandType, std::vector<std::string>>& brand_type_index() const {
    return brand_type_index_;
  }

  std::vector<const Product*> members(const VariationGroup& group) const;

  bool empty() const { return products_.empty() && groups_.empty(); }

  // Equality of content; indexes are derived.
  bool operator==(const CatalogStore& other) const {
    return products_ == other.products_ && groups_ == other.groups_;
  }

 private:
  friend class CatalogBuilder;

  ProductMap products_;
  GroupMap groups_;
  std::map<BrandType, std::vector<std::string>> brand_type_index_;
  std::map<std::string, std::string, std::less<>> group_of_;
};

class CatalogBuilder {
 public:
  // Returns false when an identical record was already present. Throws
  // InputError when the id is taken by a different body.
  bool add_product(Product product);
  bool add_group(VariationGroup group);

  std::size_t product_count() const { return products_.size(); }

  // Resolves group membership and builds the indexes. Throws InputError for a
  // member id that does not resolve, a repeated member, a product listed in
  // two groups, or gold keys that no member carries.
  CatalogStore build() &&;

 private:
  CatalogStore::ProductMap products_;
  CatalogStore::GroupMap groups_;
};

}  // namespace varm::catalog
