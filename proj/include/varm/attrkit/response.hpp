#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "varm/attrkit/labels.hpp"

namespace varm::attrs {

struct AttrPrediction {
  std::vector<std::string> different;  // normalized names, first occurrence kept
  std::vector<std::string> same;
  std::vector<std::string> reason;
  // Names present in both lists as the model returned them.
  std::vector<std::string> contradictions;
  // The reply carried text outside the JSON object.
  bool extra_text = false;

  bool operator==(const AttrPrediction&) const = default;
};

// First balanced {...} span in `text` that parses as a JSON object.
std::optional<nlohmann::json> extract_first_json_object(std::string_view text);

// Throws ParseError (raw text attached) when no JSON object is found or when
// "Different"/"Same" are missing or not string arrays. "Reason" is optional.
AttrPrediction parse_attr_response(std::string_view text);

struct ReconciledLabels {
  AttrLabels labels;
  std::size_t penalty_count = 0;
};

// A name labeled both ways resolves to variation and costs one penalty.
ReconciledLabels reconcile_labels(const AttrPrediction& prediction);

nlohmann::json to_json(const AttrPrediction& prediction);

}  // namespace varm::attrs
