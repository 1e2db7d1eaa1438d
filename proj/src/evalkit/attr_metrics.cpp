#include "varm/evalkit/attr_metrics.hpp"

#include <set>

#include "varm/common/errors.hpp"
#include "varm/common/text.hpp"

namespace varm::eval {
namespace {

std::set<std::string> normalized(std::span<const std::string> names) {
  std::set<std::string> out;
  for (const auto& n : names) {
    auto k = normalize_key(n);
    if (!k.empty()) out.insert(std::move(k));
  }
  return out;
}

}  // namespace

RecallResult variation_recall(std::span<const std::string> predicted,
                              std::span<const std::string> gold,
                              std::optional<std::span<const std::string>> filter) {
  auto pred = normalized(predicted);
  auto truth = normalized(gold);
  if (filter) {
    auto keep = normalized(*filter);
    std::erase_if(truth, [&](const std::string& k) { return !keep.contains(k); });
  }
  RecallResult r;
  r.gold_size = truth.size();
  if (truth.empty()) return r;
  for (const auto& g : truth) {
    if (pred.contains(g)) {
      ++r.matched;
      continue;
    }
    for (const auto& p : pred) {
      if (!truth.contains(p) && levenshtein(g, p) <= 2) r.near_misses.emplace_back(g, p);
    }
  }
  r.recall = static_cast<double>(r.matched) / static_cast<double>(r.gold_size);
  return r;
}

void RecallTally::add(const RecallResult& r) {
  if (!r.recall) {
    ++skipped;
    return;
  }
  sum += *r.recall;
  ++groups;
}

std::optional<double> RecallTally::mean() const {
  if (groups == 0) return std::nullopt;
  return sum / static_cast<double>(groups);
}

std::optional<double> ClassAccuracy::accuracy() const {
  if (total == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(total);
}

AttrAccuracy attr_accuracy(const attrs::AttrLabels& predicted, const attrs::AttrLabels& gold) {
  if (gold.empty()) throw InputError("attribute accuracy needs at least one gold label");
  attrs::AttrLabels pred;
  for (const auto& [k, v] : predicted) pred[normalize_key(k)] = v;

  AttrAccuracy out;
  for (const auto& [raw_key, truth] : gold) {
    auto it = pred.find(normalize_key(raw_key));
    bool correct = it != pred.end() && it->second == truth;
    auto& cls = truth == attrs::AttrLabel::kVariation ? out.variation : out.common;
    ++cls.total;
    ++out.overall.total;
    if (correct) {
      ++cls.correct;
      ++out.overall.correct;
    }
  }
  return out;
}

}  // namespace varm::eval
