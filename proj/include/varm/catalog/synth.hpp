#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "varm/catalog/store.hpp"

namespace varm::catalog {

struct SynthSpec {
  int n_types = 2;
  int brands_per_type = 2;
  int groups_per_brand = 5;
  int group_size_min = 2;
  int group_size_max = 4;
  // Candidate keys to plant; each group draws variation_keys_per_group of them.
  std::vector<std::string> variation_keys = {"color", "size"};
  int variation_keys_per_group = 1;
  std::vector<std::string> common_keys = {"material"};
};

// Throws ValidationError naming every bad field.
void validate(const SynthSpec& spec);

// Deterministic in (spec, seed). Members of a group share brand, product type,
// title and every common key; every planted variation key takes pairwise
// distinct values inside the group and is recorded as gold.
CatalogStore synth_catalog(const SynthSpec& spec, std::uint64_t seed);

nlohmann::json to_json(const SynthSpec& spec);
SynthSpec synth_spec_from_json(const nlohmann::json& j);

}  // namespace varm::catalog
