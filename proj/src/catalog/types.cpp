#include "varm/catalog/types.hpp"

#include <set>

#include "varm/common/errors.hpp"
#include "varm/common/text.hpp"

namespace varm::catalog {

const std::string* Product::find(std::string_view key) const {
  for (const auto& a : attributes) {
    if (a.key == key) return &a.value;
  }
  return nullptr;
}

namespace {

void mirror_field(Product& p, std::optional<std::string>& field, const char* key) {
  if (field) *field = trim(*field);
  if (field && field->empty()) field.reset();
  const std::string* attr = p.find(key);
  if (field && attr) {
    if (*attr != *field) {
      throw InputError("product '" + p.product_id + "': field " + key + " = '" + *field +
                       "' disagrees with attribute value '" + *attr + "'");
    }
  } else if (field) {
    p.attributes.push_back({key, *field});
  } else if (attr) {
    field = *attr;
  }
}

}  // namespace

Product make_product(std::string product_id, std::vector<Attribute> attributes,
                     std::optional<std::string> brand, std::optional<std::string> product_type,
                     std::optional<std::string> source_url) {
  Product p;
  p.product_id = trim(product_id);
  if (p.product_id.empty()) throw InputError("product_id must be non-empty");

  std::set<std::string, std::less<>> seen;
  p.attributes.reserve(attributes.size() + 2);
  for (auto& a : attributes) {
    std::string key = normalize_key(a.key);
    if (key.empty()) throw InputError("product '" + p.product_id + "': empty attribute key");
    if (!seen.insert(key).second) {
      throw InputError("product '" + p.product_id + "': duplicate attribute key '" + key + "'");
    }
    p.attributes.push_back({std::move(key), std::move(a.value)});
  }
  mirror_field(p, brand, "brand");
  mirror_field(p, product_type, "product_type");
  p.brand = std::move(brand);
  p.product_type = std::move(product_type);
  if (source_url && !source_url->empty()) p.source_url = std::move(source_url);
  return p;
}

}  // namespace varm::catalog
