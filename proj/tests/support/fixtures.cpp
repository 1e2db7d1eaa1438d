#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "varm/catalog/ingest.hpp"

namespace varm::testing {

std::filesystem::path data_path(std::string_view relative) {
  return std::filesystem::path(VARM_TEST_DATA_DIR) / std::string(relative);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

catalog::CatalogStore listings_store() {
  auto report = catalog::ingest_catalog(data_path("fixtures/listings_catalog.jsonl"));
  if (!report.errors.empty()) throw std::runtime_error("listing fixture has record errors");
  return std::move(report.store);
}

std::vector<catalog::Product> golden_products() {
  auto shoe = [](const char* id, const char* color, const char* size) {
    return catalog::make_product(id, {{"Title", "Trail Runner 2 Shoe"}, {"Color", color}, {"Size", size}},
                                 "Acme", "Shoe");
  };
  return {shoe("gold-1", "Red", "9"), shoe("gold-2", "Blue", "10"), shoe("gold-3", "Red", "10")};
}

catalog::CatalogStore random_store(Rng& rng, const RandomStoreShape& shape) {
  static const char* kKeys[] = {"color", "size", "material", "title", "width", "flavor"};
  static const char* kValues[] = {"red", "blue", "s", "m", "l", "cotton", "wool", "x", "y"};
  catalog::CatalogBuilder builder;
  auto n = static_cast<std::size_t>(
      rng.between(static_cast<std::int64_t>(shape.min_products), static_cast<std::int64_t>(shape.max_products)));
  auto chance = [&](double p) { return static_cast<double>(rng.below(1000000)) < p * 1e6; };
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = "r" + std::to_string(i);
    std::optional<std::string> brand, type;
    if (!chance(shape.missing_field_rate)) brand = "brand" + std::to_string(rng.below(shape.brands));
    if (!chance(shape.missing_field_rate)) type = "type" + std::to_string(rng.below(shape.types));
    std::vector<catalog::Attribute> attrs;
    for (const char* k : kKeys) {
      if (rng.below(2)) attrs.push_back({k, kValues[rng.below(std::size(kValues))]});
    }
    builder.add_product(catalog::make_product(id, std::move(attrs), brand, type));
    ids.push_back(id);
  }
  rng.shuffle(std::span(ids));
  std::size_t g = 0;
  for (std::size_t i = 0; i < ids.size();) {
    if (!chance(shape.grouped_rate)) {
      ++i;
      continue;
    }
    std::size_t size = std::min<std::size_t>(ids.size() - i, 1 + rng.below(4));
    catalog::VariationGroup group;
    group.group_id = "rg" + std::to_string(g++);
    group.member_ids.assign(ids.begin() + static_cast<std::ptrdiff_t>(i),
                            ids.begin() + static_cast<std::ptrdiff_t>(i + size));
    builder.add_group(std::move(group));
    i += size;
  }
  return std::move(builder).build();
}

}  // namespace varm::testing
