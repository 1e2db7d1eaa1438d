#pragma once

// Straightforward reference implementations, kept deliberately naive so they
// share no code or shortcuts with the library.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "varm/catalog/store.hpp"

namespace varm::testing::oracle {

inline std::set<std::pair<std::string, std::string>> positive_pairs(const catalog::CatalogStore& store) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, pa] : store.products()) {
    for (const auto& [b, pb] : store.products()) {
      if (!(a < b)) continue;
      const std::string* ga = store.group_of(a);
      const std::string* gb = store.group_of(b);
      if (ga && gb && *ga == *gb) out.emplace(a, b);
    }
  }
  return out;
}

// Fraction of (positive, negative) score pairs ranked correctly, ties half.
inline double auroc(const std::vector<double>& scores, const std::vector<bool>& positive) {
  double wins = 0;
  double total = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!positive[i]) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (positive[j]) continue;
      total += 1;
      if (scores[i] > scores[j]) wins += 1;
      else if (scores[i] == scores[j]) wins += 0.5;
    }
  }
  return wins / total;
}

enum class Bucket { kHard, kMedium, kEasy, kNone };

// Bucket of a cross-group pair, written out case by case.
inline Bucket bucket(const catalog::Product& a, const catalog::Product& b) {
  bool brand_known = a.brand.has_value() && b.brand.has_value();
  bool type_known = a.product_type.has_value() && b.product_type.has_value();
  bool same_brand = brand_known && *a.brand == *b.brand;
  bool same_type = type_known && *a.product_type == *b.product_type;
  if (same_brand && same_type) return Bucket::kHard;
  if (same_type && !same_brand) return Bucket::kMedium;
  if (!same_type && !same_brand) return Bucket::kEasy;
  return Bucket::kNone;
}

}  // namespace varm::testing::oracle
