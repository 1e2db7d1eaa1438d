#pragma once

#include <optional>

#include "varm/pairforge/labeled_pair.hpp"

namespace varm::match {

using pairforge::PairLabel;

inline constexpr double kDefaultThreshold = 0.5;

enum class ScoreSource { kBaseline, kRemote, kGenerative, kOracle };

struct MatchVerdict {
  PairLabel label = PairLabel::kMismatch;
  double similarity = 0.0;  // [0, 1]
  // Set when a generative reply carried no usable score.
  bool default_used = false;

  bool operator==(const MatchVerdict&) const = default;
};

struct MatchScore {
  double probability = 0.0;  // [0, 1]
  ScoreSource source = ScoreSource::kBaseline;
  // Generative backends answer yes/no directly; the verdict is kept verbatim.
  std::optional<MatchVerdict> verdict;
  bool degenerate = false;  // baseline on two attribute-less products
};

// label = variant_match iff probability >= threshold. Throws InputError for a
// threshold outside [0, 1].
MatchVerdict classify(const MatchScore& score, double threshold = kDefaultThreshold);

const char* to_string(ScoreSource source);

}  // namespace varm::match
