#pragma once

#include "varm/catalog/types.hpp"

namespace varm::match {

struct BaselineResult {
  double score = 0.0;
  bool degenerate = false;  // both products lack attributes
};

// Jaccard similarity of the two products' sets of (key, value token) pairs,
// using BasicTokenizer on values. Symmetric; 1.0 iff the sets are equal and
// non-empty, 0.0 iff disjoint.
BaselineResult baseline_similarity(const catalog::Product& left, const catalog::Product& right);

inline double baseline_score(const catalog::Product& left, const catalog::Product& right) {
  return baseline_similarity(left, right).score;
}

}  // namespace varm::match
