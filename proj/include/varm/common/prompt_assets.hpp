#pragma once

#include <string_view>

// Prompt templates compiled from assets/prompts/*.txt.
namespace varm::assets {

extern const std::string_view kMatchPromptV1;
extern const std::string_view kAttrPromptV1;
extern const std::string_view kAttrRagContextV1;

}  // namespace varm::assets
