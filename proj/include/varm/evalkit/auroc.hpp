#pragma once

#include <span>

#include "varm/pairforge/labeled_pair.hpp"

namespace varm::eval {

// Mann-Whitney estimate: the share of (positive, negative) pairs where the
// positive scores higher, ties counting one half. O(n log n). Throws
// InputError on length mismatch, non-finite scores, or a missing class.
double auroc(std::span<const double> scores, std::span<const pairforge::PairLabel> gold);

}  // namespace varm::eval
