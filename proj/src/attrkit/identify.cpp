#include "varm/attrkit/identify.hpp"

#include "varm/attrkit/prompt.hpp"
#include "varm/attrkit/retrieval.hpp"
#include "varm/common/errors.hpp"
#include "varm/common/parallel.hpp"

namespace varm::attrs {

using nlohmann::json;

namespace {

std::string first_present(std::span<const catalog::Product* const> group,
                          std::optional<std::string> catalog::Product::*field) {
  for (const auto* p : group) {
    if (p->*field) return *(p->*field);
  }
  return {};
}

json labels_json(const AttrLabels& labels) {
  json out = json::object();
  for (const auto& [k, v] : labels) out[k] = to_string(v);
  return out;
}

}  // namespace

AttrIdentification identify_attributes(match::CompletionClient& client,
                                       std::span<const catalog::Product* const> group,
                                       bool use_rag, const catalog::CatalogStore& store,
                                       const match::GenerationParams& params) {
  std::optional<RagContext> context;
  if (use_rag) {
    std::vector<std::string> own;
    for (const auto* p : group) own.push_back(p->product_id);
    context = retrieve_variation_context(store, first_present(group, &catalog::Product::product_type),
                                         first_present(group, &catalog::Product::brand), own);
  }
  AttrIdentification out;
  out.prompt = build_attr_prompt(group, context);
  out.raw = parse_attr_response(client.complete(out.prompt, params));
  auto reconciled = reconcile_labels(out.raw);
  out.labels = std::move(reconciled.labels);
  out.penalty_count = reconciled.penalty_count;
  return out;
}

std::vector<GroupOutcome> identify_groups(match::CompletionClient& client,
                                          const catalog::CatalogStore& store,
                                          std::span<const std::string> group_ids, bool use_rag,
                                          const match::GenerationParams& params,
                                          std::size_t workers) {
  std::vector<GroupOutcome> out(group_ids.size());
  parallel_for(group_ids.size(), workers, [&](std::size_t i) {
    out[i].group_id = group_ids[i];
    try {
      const auto* group = store.find_group(group_ids[i]);
      if (!group) throw InputError("unknown group_id '" + group_ids[i] + "'");
      auto members = store.members(*group);
      out[i].result = identify_attributes(client, members, use_rag, store, params);
    } catch (const ParseError& e) {
      out[i].error = std::string(e.what()) + "; raw: " + e.raw();
    } catch (const Error& e) {
      out[i].error = e.what();
    }
  });
  return out;
}

json report_line(const GroupOutcome& outcome, const std::string& method) {
  json j = {{"group_id", outcome.group_id}, {"method", method}};
  if (!outcome.result) {
    j["error"] = outcome.error;
    return j;
  }
  j["labels"] = labels_json(outcome.result->labels);
  j["penalty_count"] = outcome.result->penalty_count;
  j["raw"] = to_json(outcome.result->raw);
  return j;
}

json report_line(const std::string& group_id, const AttrLabels& heuristic) {
  return {{"group_id", group_id},
          {"method", "heuristic"},
          {"labels", labels_json(heuristic)},
          {"penalty_count", 0},
          {"raw", nullptr}};
}

}  // namespace varm::attrs
