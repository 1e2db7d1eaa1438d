#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace varm {

// Attribute-key canonical form: trimmed, ASCII-lowercased, every internal
// whitespace run collapsed to a single '_'. "Item Package  Quantity" ->
// "item_package_quantity". Non-ASCII bytes pass through unchanged.
std::string normalize_key(std::string_view key);

// Value canonical form used for equality tests: trimmed, ASCII-lowercased,
// whitespace runs collapsed to one space.
std::string normalize_value(std::string_view value);

std::string trim(std::string_view s);

std::string join(std::span<const std::string> parts, std::string_view sep);

std::size_t levenshtein(std::string_view a, std::string_view b);

}  // namespace varm
