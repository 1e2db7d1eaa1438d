#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace varm {

std::uint64_t fnv1a64(std::string_view bytes);

// 16 lowercase hex digits of fnv1a64; used as the config digest stamped into
// every artifact.
std::string digest_hex(std::string_view bytes);

}  // namespace varm
