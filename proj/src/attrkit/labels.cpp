#include "varm/attrkit/labels.hpp"

#include <string>

#include "varm/common/errors.hpp"

namespace varm::attrs {

const char* to_string(AttrLabel label) {
  return label == AttrLabel::kVariation ? "variation" : "common";
}

AttrLabel parse_attr_label(std::string_view s) {
  if (s == "variation") return AttrLabel::kVariation;
  if (s == "common") return AttrLabel::kCommon;
  throw InputError("unknown attribute label '" + std::string(s) + "'");
}

}  // namespace varm::attrs
