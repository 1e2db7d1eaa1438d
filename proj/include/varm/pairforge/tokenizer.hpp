#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace varm::pairforge {

// Deterministic text-to-token-symbol mapping. Implementations must return the
// same tokens for the same text on every call.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual std::string id() const = 0;
  virtual std::vector<std::string> tokenize(std::string_view text) const = 0;
};

// Lowercases ASCII, splits on whitespace, and emits each ASCII punctuation
// character as its own token. Bytes >= 0x80 are word characters.
class BasicTokenizer final : public Tokenizer {
 public:
  std::string id() const override { return "basic-v1"; }
  std::vector<std::string> tokenize(std::string_view text) const override;
};

}  // namespace varm::pairforge
