#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace varm::match {

// Where and how to reach a model service.
struct Endpoint {
  std::string url;  // http://host[:port]/path
  int timeout_ms = 30000;
  int max_attempts = 3;
  int max_in_flight = 8;
  int backoff_initial_ms = 200;
  int backoff_cap_ms = 2000;
};

struct ParsedUrl {
  std::string scheme;
  std::string host;
  int port = 80;
  std::string path;
};

// Throws ValidationError when the descriptor is not well formed.
ParsedUrl parse_endpoint_url(const std::string& url);
void validate(const Endpoint& endpoint);

struct GenerationParams {
  int max_tokens = 30;
  double temperature = 0.0;
  std::optional<int> top_k;
  std::optional<double> top_p;

  nlohmann::json to_json() const;
  bool operator==(const GenerationParams&) const = default;
};

// Matching: 30 tokens, temperature 0, top_k 100.
GenerationParams match_generation_defaults();
// Attribute identification: 500 tokens, temperature 0, top_p 0.9.
GenerationParams attr_generation_defaults();

// One pair on the remote scoring wire.
struct WirePair {
  std::vector<std::string> tokens;
  std::string left_text;
  std::string right_text;
};

nlohmann::json encode_score_request(std::span<const WirePair> pairs);
// Requires {"scores": [...]} with `expected` numbers in [0, 1]; ParseError
// otherwise.
std::vector<double> decode_score_response(const std::string& body, std::size_t expected);

nlohmann::json encode_completion_request(const std::string& prompt, const GenerationParams& params);
std::string decode_completion_response(const std::string& body);

class ScoringClient {
 public:
  virtual ~ScoringClient() = default;
  virtual std::vector<double> score_batch(std::span<const WirePair> pairs) = 0;
};

class CompletionClient {
 public:
  virtual ~CompletionClient() = default;
  virtual std::string complete(const std::string& prompt, const GenerationParams& params) = 0;
};

// Thrown by a single attempt; the retry loop decides whether to try again.
class AttemptFailure : public std::runtime_error {
 public:
  AttemptFailure(const std::string& what, bool retryable)
      : std::runtime_error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

// POSTs `body` as JSON and returns the response body. Connection failures,
// timeouts and 5xx replies are retried with capped exponential backoff up to
// endpoint.max_attempts; the final failure surfaces as TransportError.
std::string post_json(const Endpoint& endpoint, const std::string& body);

class HttpScoringClient final : public ScoringClient {
 public:
  explicit HttpScoringClient(Endpoint endpoint);
  std::vector<double> score_batch(std::span<const WirePair> pairs) override;

 private:
  Endpoint endpoint_;
};

class HttpCompletionClient final : public CompletionClient {
 public:
  explicit HttpCompletionClient(Endpoint endpoint);
  std::string complete(const std::string& prompt, const GenerationParams& params) override;

 private:
  Endpoint endpoint_;
};

}  // namespace varm::match
