#include "varm/common/errors.hpp"

namespace varm {
namespace {

std::string summarize(const std::vector<std::string>& violations) {
  std::string out = "invalid configuration:";
  for (const auto& v : violations) {
    out += "\n  - ";
    out += v;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(ErrorCategory::kValidation, summarize(violations)),
      violations_(std::move(violations)) {}

const char* to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kInput: return "input";
    case ErrorCategory::kValidation: return "validation";
    case ErrorCategory::kParse: return "parse";
    case ErrorCategory::kTransport: return "transport";
    case ErrorCategory::kInternal: return "internal";
  }
  return "internal";
}

}  // namespace varm
