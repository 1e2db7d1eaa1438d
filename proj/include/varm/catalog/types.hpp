#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace varm::catalog {

struct Attribute {
  std::string key;  // normalized, see normalize_key()
  std::string value;

  bool operator==(const Attribute&) const = default;
};

struct Product {
  std::string product_id;
  std::optional<std::string> brand;
  std::optional<std::string> product_type;
  std::vector<Attribute> attributes;  // stored order is significant
  std::optional<std::string> source_url;

  const std::string* find(std::string_view key) const;

  bool operator==(const Product&) const = default;
};

struct VariationGroup {
  std::string group_id;
  std::vector<std::string> member_ids;
  std::optional<std::vector<std::string>> gold_variation_keys;

  bool operator==(const VariationGroup&) const = default;
};

// Builds a Product that satisfies the catalog invariants: keys normalized and
// unique, brand/product_type mirrored between the fields and the attributes
// list. A field given only as an attribute is lifted into the field; a field
// given only as a field is appended as an attribute. Throws InputError on an
// empty id, a duplicate key, or a field/attribute disagreement.
Product make_product(std::string product_id, std::vector<Attribute> attributes,
                     std::optional<std::string> brand = std::nullopt,
                     std::optional<std::string> product_type = std::nullopt,
                     std::optional<std::string> source_url = std::nullopt);

}  // namespace varm::catalog
