#include "varm/pairforge/split.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "varm/common/errors.hpp"
#include "varm/common/rng.hpp"

namespace varm::pairforge {
namespace {

constexpr int kTrain = 0;
constexpr int kEval = 1;
constexpr int kCross = 2;

// Label counts per side for a candidate assignment.
struct Tally {
  std::array<long, 2> pos{0, 0};
  std::array<long, 2> neg{0, 0};

  void add(int side, bool positive, long delta) {
    if (side == kCross) return;
    (positive ? pos : neg)[side] += delta;
  }

  double kept(int side, bool balance) const {
    return balance ? 2.0 * std::min(pos[side], neg[side])
                   : static_cast<double>(pos[side] + neg[side]);
  }

  double train_fraction(bool balance) const {
    double t = kept(kTrain, balance), e = kept(kEval, balance);
    return t + e > 0 ? t / (t + e) : 0.0;
  }
};

}  // namespace

double DatasetSplit::train_fraction() const {
  std::size_t total = train.size() + eval.size();
  return total ? static_cast<double>(train.size()) / static_cast<double>(total) : 0.0;
}

DatasetSplit split_dataset(const catalog::CatalogStore& store,
                           std::span<const LabeledPair> pairs, double ratio,
                           std::uint64_t seed, SplitOptions options) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw InputError("split ratio must lie strictly between 0 and 1, got " + std::to_string(ratio));
  }

  // Map every product to its splitting unit.
  std::map<std::string, std::size_t, std::less<>> unit_index;
  std::vector<std::string> unit_names;
  auto unit_of = [&](const std::string& product_id) {
    const std::string* g = store.group_of(product_id);
    if (!g && !store.find_product(product_id)) {
      throw InputError("pair references unknown product_id '" + product_id + "'");
    }
    std::string name = g ? *g : "~" + product_id;
    auto [it, inserted] = unit_index.try_emplace(name, unit_names.size());
    if (inserted) unit_names.push_back(name);
    return it->second;
  };

  struct Edge {
    std::size_t u, v;
    bool positive;
  };
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  bool has_pos = false, has_neg = false;
  for (const auto& p : pairs) {
    bool positive = p.label == PairLabel::kVariantMatch;
    (positive ? has_pos : has_neg) = true;
    edges.push_back({unit_of(p.left_id), unit_of(p.right_id), positive});
  }
  const std::size_t n_units = unit_names.size();
  if (n_units < 2) {
    throw InputError("splitting needs at least 2 variation groups, found " + std::to_string(n_units));
  }
  const bool balance = options.balance && has_pos && has_neg;

  Rng rng = Rng::derive(seed, "split_dataset");
  std::vector<std::size_t> order(n_units);
  for (std::size_t i = 0; i < n_units; ++i) order[i] = i;
  // Sort by name first so the shuffle does not depend on pair order.
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return unit_names[a] < unit_names[b]; });
  rng.shuffle(std::span(order));

  // With balancing, a negative survives only when both units share a side, so
  // a unit share q keeps q^2 : (1-q)^2 of the negatives. Start from the q that
  // makes that ratio equal `ratio`, then refine.
  double q = ratio;
  if (balance) q = std::sqrt(ratio) / (std::sqrt(ratio) + std::sqrt(1.0 - ratio));
  auto n_train = static_cast<std::size_t>(std::llround(q * static_cast<double>(n_units)));
  n_train = std::clamp<std::size_t>(n_train, 1, n_units - 1);

  std::vector<int> side(n_units, kEval);
  for (std::size_t i = 0; i < n_train; ++i) side[order[i]] = kTrain;

  std::vector<std::vector<std::size_t>> touching(n_units);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    touching[edges[e].u].push_back(e);
    if (edges[e].v != edges[e].u) touching[edges[e].v].push_back(e);
  }
  auto edge_side = [&](const Edge& e) { return side[e.u] == side[e.v] ? side[e.u] : kCross; };

  Tally tally;
  for (const auto& e : edges) tally.add(edge_side(e), e.positive, 1);
  std::array<std::size_t, 2> units_per_side{n_train, n_units - n_train};

  // Single-unit moves, first-improvement, in shuffled order.
  constexpr double kGoodEnough = 5e-4;
  for (int pass = 0; pass < 64; ++pass) {
    bool improved = false;
    for (std::size_t u : order) {
      double gap = std::abs(tally.train_fraction(balance) - ratio);
      if (gap <= kGoodEnough) break;
      int from = side[u], to = 1 - from;
      if (units_per_side[from] <= 1) continue;
      Tally trial = tally;
      for (std::size_t e : touching[u]) trial.add(edge_side(edges[e]), edges[e].positive, -1);
      side[u] = to;
      for (std::size_t e : touching[u]) trial.add(edge_side(edges[e]), edges[e].positive, 1);
      if (std::abs(trial.train_fraction(balance) - ratio) + 1e-12 < gap) {
        tally = trial;
        --units_per_side[from];
        ++units_per_side[to];
        improved = true;
      } else {
        side[u] = from;
      }
    }
    if (!improved || std::abs(tally.train_fraction(balance) - ratio) <= kGoodEnough) break;
  }

  DatasetSplit split;
  split.seed = seed;
  split.ratio = ratio;
  for (std::size_t u = 0; u < n_units; ++u) {
    (side[u] == kTrain ? split.train_groups : split.eval_groups).push_back(unit_names[u]);
  }
  std::sort(split.train_groups.begin(), split.train_groups.end());
  std::sort(split.eval_groups.begin(), split.eval_groups.end());

  // Indices per side and label, in input order.
  std::array<std::array<std::vector<std::size_t>, 2>, 2> bins;  // [side][positive]
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int s = edge_side(edges[i]);
    if (s == kCross) {
      ++split.dropped_cross_split;
      continue;
    }
    bins[s][edges[i].positive ? 1 : 0].push_back(i);
  }

  std::vector<char> keep(edges.size(), 0);
  for (int s : {kTrain, kEval}) {
    auto& neg = bins[s][0];
    auto& pos = bins[s][1];
    if (balance) {
      auto& major = pos.size() > neg.size() ? pos : neg;
      std::size_t target = std::min(pos.size(), neg.size());
      if (major.size() > target) {
        Rng pick = Rng::derive(seed, s == kTrain ? "split_dataset/balance/train"
                                                 : "split_dataset/balance/eval");
        pick.shuffle(std::span(major));
        split.dropped_for_balance += major.size() - target;
        major.resize(target);
      }
    }
    for (auto i : pos) keep[i] = 1;
    for (auto i : neg) keep[i] = 1;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!keep[i]) continue;
    (edge_side(edges[i]) == kTrain ? split.train : split.eval).push_back(pairs[i]);
  }
  return split;
}

}  // namespace varm::pairforge
