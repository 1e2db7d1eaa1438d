#pragma once

#include <cstddef>
#include <string>

#include "varm/catalog/types.hpp"

namespace varm::match {

// Attribute block for one product:
//   <product 1>
//   brand = Razer,
//   title = ...,
//   </product 1>
// Keys are the normalized keys, one per line in stored order.
std::string render_product_block(const catalog::Product& product, std::size_t index);

// The zero-shot variant-classification prompt with both product blocks
// substituted. Byte-stable for fixed inputs.
std::string build_match_prompt(const catalog::Product& left, const catalog::Product& right);

}  // namespace varm::match
