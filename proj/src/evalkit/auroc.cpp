#include "varm/evalkit/auroc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "varm/common/errors.hpp"

namespace varm::eval {

double auroc(std::span<const double> scores, std::span<const pairforge::PairLabel> gold) {
  if (scores.size() != gold.size()) {
    throw InputError("auroc: " + std::to_string(scores.size()) + " scores vs " +
                     std::to_string(gold.size()) + " labels");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  for (double s : scores) {
    if (!std::isfinite(s)) throw InputError("auroc: non-finite score");
  }
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return scores[a] < scores[b]; });

  // Twice the Mann-Whitney U, kept integral so the result is exact.
  std::uint64_t twice_u = 0, negatives_below = 0, pos_total = 0, neg_total = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::uint64_t pos = 0, neg = 0;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      (gold[order[j]] == pairforge::PairLabel::kVariantMatch ? pos : neg) += 1;
      ++j;
    }
    twice_u += 2 * pos * negatives_below + pos * neg;
    negatives_below += neg;
    pos_total += pos;
    neg_total += neg;
    i = j;
  }
  if (pos_total == 0 || neg_total == 0) {
    throw InputError("auroc is undefined without both positive and negative examples");
  }
  return static_cast<double>(twice_u) /
         (2.0 * static_cast<double>(pos_total) * static_cast<double>(neg_total));
}

}  // namespace varm::eval
