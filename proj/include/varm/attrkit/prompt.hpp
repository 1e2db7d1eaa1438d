#pragma once

#include <optional>
#include <span>
#include <string>

#include "varm/attrkit/retrieval.hpp"
#include "varm/catalog/types.hpp"

namespace varm::attrs {

// Variation-attribute identification prompt. Members are rendered as
// numbered product blocks; the retrieved-context sentences are inserted only
// when `context` is given. Throws InputError for fewer than two products.
std::string build_attr_prompt(std::span<const catalog::Product* const> group,
                              const std::optional<RagContext>& context = std::nullopt);

}  // namespace varm::attrs
