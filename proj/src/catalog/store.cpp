#include "varm/catalog/store.hpp"

#include <algorithm>
#include <set>

#include "varm/common/errors.hpp"
#include "varm/common/text.hpp"

namespace varm::catalog {

const Product* CatalogStore::find_product(std::string_view id) const {
  auto it = products_.find(id);
  return it == products_.end() ? nullptr : &it->second;
}

const Product& CatalogStore::product(std::string_view id) const {
  if (const Product* p = find_product(id)) return *p;
  throw InputError("unknown product_id '" + std::string(id) + "'");
}

const VariationGroup* CatalogStore::find_group(std::string_view id) const {
  auto it = groups_.find(id);
  return it == groups_.end() ? nullptr : &it->second;
}

const std::string* CatalogStore::group_of(std::string_view product_id) const {
  auto it = group_of_.find(product_id);
  return it == group_of_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& CatalogStore::with_brand_type(const BrandType& key) const {
  static const std::vector<std::string> kEmpty;
  auto it = brand_type_index_.find(key);
  return it == brand_type_index_.end() ? kEmpty : it->second;
}

std::vector<const Product*> CatalogStore::members(const VariationGroup& group) const {
  std::vector<const Product*> out;
  out.reserve(group.member_ids.size());
  for (const auto& id : group.member_ids) out.push_back(&product(id));
  return out;
}

bool CatalogBuilder::add_product(Product product) {
  auto [it, inserted] = products_.try_emplace(product.product_id, product);
  if (inserted) return true;
  if (it->second == product) return false;
  throw InputError("duplicate product_id '" + product.product_id + "' with a conflicting body");
}

bool CatalogBuilder::add_group(VariationGroup group) {
  if (group.gold_variation_keys) {
    for (auto& k : *group.gold_variation_keys) k = normalize_key(k);
  }
  auto [it, inserted] = groups_.try_emplace(group.group_id, group);
  if (inserted) return true;
  if (it->second == group) return false;
  throw InputError("duplicate group_id '" + group.group_id + "' with a conflicting body");
}

CatalogStore CatalogBuilder::build() && {
  CatalogStore store;
  store.products_ = std::move(products_);
  store.groups_ = std::move(groups_);

  for (const auto& [id, p] : store.products_) {
    store.brand_type_index_[{p.brand, p.product_type}].push_back(id);
  }

  for (const auto& [gid, g] : store.groups_) {
    if (g.group_id.empty()) throw InputError("group_id must be non-empty");
    if (g.member_ids.empty()) throw InputError("group '" + gid + "' has no members");
    std::set<std::string, std::less<>> keys;
    std::set<std::string_view> seen;
    for (const auto& m : g.member_ids) {
      const Product* p = store.find_product(m);
      if (!p) throw InputError("group '" + gid + "' references unknown product_id '" + m + "'");
      if (!seen.insert(m).second) {
        throw InputError("group '" + gid + "' lists product '" + m + "' twice");
      }
      auto [it, inserted] = store.group_of_.try_emplace(m, gid);
      if (!inserted) {
        throw InputError("product '" + m + "' belongs to both group '" + it->second +
                         "' and group '" + gid + "'");
      }
      for (const auto& a : p->attributes) keys.insert(a.key);
    }
    if (g.gold_variation_keys) {
      for (const auto& k : *g.gold_variation_keys) {
        if (!keys.contains(k)) {
          throw InputError("group '" + gid + "' gold variation key '" + k +
                           "' is not an attribute of any member");
        }
      }
    }
  }
  return store;
}

}  // namespace varm::catalog
