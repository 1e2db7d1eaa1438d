#include "varm/attrkit/response.hpp"

#include <algorithm>
#include <set>

#include "varm/common/errors.hpp"
#include "varm/common/text.hpp"

namespace varm::attrs {

using nlohmann::json;

namespace {

// End of the balanced object starting at `open`, honoring string literals.
std::optional<std::size_t> matching_brace(std::string_view text, std::size_t open) {
  int depth = 0;
  bool in_string = false, escaped = false;
  for (std::size_t i = open; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      if (escaped) escaped = false;
      else if (c == '\\') escaped = true;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == '{') ++depth;
    else if (c == '}' && --depth == 0) return i;
  }
  return std::nullopt;
}

std::vector<std::string> name_list(const json& obj, const char* field, std::string_view raw) {
  auto it = obj.find(field);
  if (it == obj.end()) throw ParseError(std::string("reply lacks \"") + field + "\"", std::string(raw));
  if (!it->is_array()) {
    throw ParseError(std::string("\"") + field + "\" is not an array", std::string(raw));
  }
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& v : *it) {
    if (!v.is_string()) {
      throw ParseError(std::string("\"") + field + "\" holds a non-string entry", std::string(raw));
    }
    std::string name = normalize_key(v.get<std::string>());
    if (!name.empty() && seen.insert(name).second) out.push_back(std::move(name));
  }
  return out;
}

struct Located {
  json object;
  std::size_t begin;
  std::size_t end;  // one past the closing brace
};

std::optional<Located> locate_first_object(std::string_view text) {
  for (std::size_t open = text.find('{'); open != std::string_view::npos;
       open = text.find('{', open + 1)) {
    auto close = matching_brace(text, open);
    if (!close) continue;
    json j = json::parse(text.substr(open, *close - open + 1), nullptr, false);
    if (!j.is_discarded() && j.is_object()) return Located{std::move(j), open, *close + 1};
  }
  return std::nullopt;
}

}  // namespace

std::optional<json> extract_first_json_object(std::string_view text) {
  if (auto found = locate_first_object(text)) return std::move(found->object);
  return std::nullopt;
}

AttrPrediction parse_attr_response(std::string_view text) {
  auto found = locate_first_object(text);
  if (!found) throw ParseError("no JSON object in attribute reply", std::string(text));

  const json* obj = &found->object;
  AttrPrediction pred;
  pred.different = name_list(*obj, "Different", text);
  pred.same = name_list(*obj, "Same", text);
  if (auto it = obj->find("Reason"); it != obj->end() && !it->is_null()) {
    if (it->is_string()) {
      pred.reason.push_back(it->get<std::string>());
    } else if (it->is_array()) {
      for (const auto& r : *it) {
        if (r.is_string()) pred.reason.push_back(r.get<std::string>());
      }
    }
  }
  std::set<std::string> same(pred.same.begin(), pred.same.end());
  for (const auto& d : pred.different) {
    if (same.contains(d)) pred.contradictions.push_back(d);
  }
  pred.extra_text = !trim(text.substr(0, found->begin)).empty() ||
                    !trim(text.substr(found->end)).empty();
  return pred;
}

ReconciledLabels reconcile_labels(const AttrPrediction& prediction) {
  ReconciledLabels out;
  for (const auto& s : prediction.same) out.labels[s] = AttrLabel::kCommon;
  for (const auto& d : prediction.different) out.labels[d] = AttrLabel::kVariation;
  std::set<std::string> same(prediction.same.begin(), prediction.same.end());
  for (const auto& d : prediction.different) out.penalty_count += same.count(d);
  return out;
}

json to_json(const AttrPrediction& p) {
  return {{"Different", p.different},
          {"Same", p.same},
          {"Reason", p.reason},
          {"contradictions", p.contradictions},
          {"extra_text", p.extra_text}};
}

}  // namespace varm::attrs
