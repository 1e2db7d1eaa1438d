#include "varm/matchkit/score.hpp"

#include <string>

#include "varm/common/errors.hpp"

namespace varm::match {

MatchVerdict classify(const MatchScore& score, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw InputError("threshold must lie in [0, 1], got " + std::to_string(threshold));
  }
  return {score.probability >= threshold ? PairLabel::kVariantMatch : PairLabel::kMismatch,
          score.probability, false};
}

const char* to_string(ScoreSource source) {
  switch (source) {
    case ScoreSource::kBaseline: return "baseline";
    case ScoreSource::kRemote: return "remote";
    case ScoreSource::kGenerative: return "generative";
    case ScoreSource::kOracle: return "oracle";
  }
  return "baseline";
}

}  // namespace varm::match
