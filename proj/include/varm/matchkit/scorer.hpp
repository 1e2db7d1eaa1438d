#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "varm/catalog/store.hpp"
#include "varm/matchkit/score.hpp"
#include "varm/matchkit/transport.hpp"
#include "varm/pairforge/labeled_pair.hpp"
#include "varm/pairforge/tokenizer.hpp"

namespace varm::match {

// Ground truth lookup: a pair matches iff both products sit in the same group.
class OracleTable {
 public:
  OracleTable() = default;
  explicit OracleTable(std::map<std::string, std::string, std::less<>> group_of)
      : group_of_(std::move(group_of)) {}
  static OracleTable from_store(const catalog::CatalogStore& store);

  double score(std::string_view a, std::string_view b) const;

 private:
  std::map<std::string, std::string, std::less<>> group_of_;
};

struct BaselineBackend {};

struct OracleBackend {
  OracleTable table;
};

struct RemoteBackend {
  Endpoint endpoint;
  std::size_t budget = 512;
  std::size_t batch_size = 32;
  std::shared_ptr<const pairforge::Tokenizer> tokenizer;  // BasicTokenizer when null
  std::shared_ptr<ScoringClient> client;                  // HTTP when null
};

struct GenerativeBackend {
  Endpoint endpoint;
  GenerationParams params = match_generation_defaults();
  std::shared_ptr<CompletionClient> client;  // HTTP when null
};

using ClassifierHandle = std::variant<BaselineBackend, RemoteBackend, GenerativeBackend, OracleBackend>;

std::string backend_id(const ClassifierHandle& handle);

// Single pair. Baseline and oracle are symmetric and deterministic.
MatchScore score_pair(const ClassifierHandle& handle, const catalog::Product& left,
                      const catalog::Product& right);

struct MatchResult {
  std::optional<MatchScore> score;
  std::string error;  // set when score is empty
};

// Scores many pairs; results are in input order. Backend failures for a pair
// or batch are recorded in that pair's result instead of aborting the run.
std::vector<MatchResult> score_pairs(const ClassifierHandle& handle,
                                     const catalog::CatalogStore& store,
                                     std::span<const pairforge::LabeledPair> pairs,
                                     std::size_t workers = 8);

}  // namespace varm::match
