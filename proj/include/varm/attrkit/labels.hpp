#pragma once

#include <map>
#include <string>
#include <string_view>

namespace varm::attrs {

enum class AttrLabel { kVariation, kCommon };

using AttrLabels = std::map<std::string, AttrLabel, std::less<>>;

const char* to_string(AttrLabel label);
AttrLabel parse_attr_label(std::string_view s);  // throws InputError

}  // namespace varm::attrs
