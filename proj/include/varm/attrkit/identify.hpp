#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "varm/attrkit/labels.hpp"
#include "varm/attrkit/response.hpp"
#include "varm/catalog/store.hpp"
#include "varm/matchkit/transport.hpp"

namespace varm::attrs {

struct AttrIdentification {
  AttrLabels labels;
  std::size_t penalty_count = 0;
  AttrPrediction raw;
  std::string prompt;
};

// retrieve (optional) -> build prompt -> complete -> parse -> reconcile.
// Transport and parse errors propagate.
AttrIdentification identify_attributes(match::CompletionClient& client,
                                       std::span<const catalog::Product* const> group,
                                       bool use_rag, const catalog::CatalogStore& store,
                                       const match::GenerationParams& params =
                                           match::attr_generation_defaults());

struct GroupOutcome {
  std::string group_id;
  std::optional<AttrIdentification> result;
  std::string error;  // set when result is empty
};

// Runs identify_attributes over many groups with bounded concurrency. A
// failing group is recorded and the rest still run. Output follows input order.
std::vector<GroupOutcome> identify_groups(match::CompletionClient& client,
                                          const catalog::CatalogStore& store,
                                          std::span<const std::string> group_ids, bool use_rag,
                                          const match::GenerationParams& params,
                                          std::size_t workers = 8);

// Report line: {"group_id","method","labels":{key:label},"penalty_count","raw"}
// or {"group_id","method","error"} for failed groups.
nlohmann::json report_line(const GroupOutcome& outcome, const std::string& method);
nlohmann::json report_line(const std::string& group_id, const AttrLabels& heuristic);

}  // namespace varm::attrs
