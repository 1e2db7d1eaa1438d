#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "varm/catalog/store.hpp"
#include "varm/common/rng.hpp"

namespace varm::testing {

std::filesystem::path data_path(std::string_view relative);
std::string read_file(const std::filesystem::path& path);

catalog::CatalogStore listings_store();

// Three variants of one shoe; the first two are also the match-prompt pair.
std::vector<catalog::Product> golden_products();

struct RandomStoreShape {
  std::size_t min_products = 4;
  std::size_t max_products = 40;
  std::size_t brands = 3;
  std::size_t types = 3;
  double missing_field_rate = 0.1;
  double grouped_rate = 0.8;
};

// Arbitrary small catalogs: random brand/type (sometimes missing), random
// group partition over a random subset, random attribute keys.
catalog::CatalogStore random_store(Rng& rng, const RandomStoreShape& shape = {});

}  // namespace varm::testing
