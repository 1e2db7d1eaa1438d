#pragma once

#include <span>

#include "varm/attrkit/labels.hpp"
#include "varm/catalog/types.hpp"

namespace varm::attrs {

// Labels every key present in the group. For a group of n products, a key
// with d distinct normalized values is a variation attribute iff d / n > 0.9.
// When only some members carry the key, absence counts as one more distinct
// value. Throws InputError for groups smaller than two.
AttrLabels heuristic_labels(std::span<const catalog::Product* const> group);
AttrLabels heuristic_labels(std::span<const catalog::Product> group);

}  // namespace varm::attrs
