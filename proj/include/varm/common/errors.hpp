#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace varm {

// Broad failure categories; the CLI maps each to its own exit status.
enum class ErrorCategory { kInput, kValidation, kParse, kTransport, kInternal };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorCategory::kInput, what) {}
};

// Carries every violated field so callers can report them all at once.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// A backend or model response that could not be interpreted. The raw payload
// is kept verbatim for inspection.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string raw)
      : Error(ErrorCategory::kParse, what), raw_(std::move(raw)) {}

  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

// Network-level failure after the retry policy gave up.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int attempts, bool retryable = true)
      : Error(ErrorCategory::kTransport, what), attempts_(attempts), retryable_(retryable) {}

  int attempts() const { return attempts_; }
  // False when the server rejected the request itself (4xx).
  bool retryable() const { return retryable_; }

 private:
  int attempts_;
  bool retryable_;
};

const char* to_string(ErrorCategory category);

}  // namespace varm
