#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "varm/catalog/synth.hpp"
#include "varm/matchkit/transport.hpp"
#include "varm/pairforge/dataset.hpp"

namespace varm::cli {

inline constexpr const char* kRemoteEndpointEnv = "VARM_REMOTE_ENDPOINT";
inline constexpr const char* kGenerativeEndpointEnv = "VARM_GENERATIVE_ENDPOINT";

struct RunConfig {
  std::uint64_t seed = 1;
  catalog::SynthSpec synth;
  pairforge::DatasetRecipe dataset;
  std::size_t token_budget = 512;
  std::string backend = "baseline";  // baseline | oracle | remote | generative
  double threshold = 0.5;
  match::Endpoint remote;
  std::size_t remote_batch_size = 32;
  match::Endpoint generative;
  match::GenerationParams match_generation = match::match_generation_defaults();
  match::GenerationParams attr_generation = match::attr_generation_defaults();
  std::string attr_method = "heuristic";  // heuristic | generative
  bool rag = false;
  std::vector<std::size_t> curve_sizes = {100, 200, 400};
  std::size_t workers = 8;  // not part of the digest: outputs do not depend on it
};

// Overlays a JSON object onto cfg. Unknown keys and type mismatches are
// collected into the returned list rather than thrown.
std::vector<std::string> apply_json(RunConfig& cfg, const nlohmann::json& j);

// Throws ValidationError listing every violated field. `command` enables the
// checks that only some subcommands need (endpoint urls, curve sizes).
void validate(const RunConfig& cfg, const std::string& command);

// Fully materialized config, the thing that gets digested and echoed.
nlohmann::json resolved_json(const RunConfig& cfg);
std::string config_digest(const RunConfig& cfg);

// Meta record written as the first line of every JSONL artifact.
nlohmann::json artifact_meta(const RunConfig& cfg, const std::string& command);

}  // namespace varm::cli
