#include "varm/matchkit/transport.hpp"

#include <algorithm>
#include <chrono>
#include <regex>
#include <thread>

#include <httplib.h>

#include "varm/common/errors.hpp"

namespace varm::match {

using nlohmann::json;

ParsedUrl parse_endpoint_url(const std::string& url) {
  static const std::regex re(R"(^(http)://([A-Za-z0-9.\-]+|\[[0-9A-Fa-f:]+\])(?::([0-9]{1,5}))?(/[^\s]*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, re)) {
    throw ValidationError({"endpoint: '" + url + "' is not of the form http://host[:port]/path"});
  }
  ParsedUrl out;
  out.scheme = m[1];
  out.host = m[2];
  if (m[3].matched) {
    out.port = std::stoi(m[3]);
    if (out.port < 1 || out.port > 65535) {
      throw ValidationError({"endpoint: port out of range in '" + url + "'"});
    }
  }
  out.path = m[4].matched ? std::string(m[4]) : "/";
  return out;
}

void validate(const Endpoint& e) {
  std::vector<std::string> bad;
  try {
    parse_endpoint_url(e.url);
  } catch (const ValidationError& v) {
    bad.insert(bad.end(), v.violations().begin(), v.violations().end());
  }
  if (e.timeout_ms <= 0) bad.push_back("endpoint.timeout_ms: must be positive");
  if (e.max_attempts < 1) bad.push_back("endpoint.max_attempts: must be >= 1");
  if (e.max_in_flight < 1) bad.push_back("endpoint.max_in_flight: must be >= 1");
  if (e.backoff_initial_ms < 0 || e.backoff_cap_ms < e.backoff_initial_ms) {
    bad.push_back("endpoint.backoff: need 0 <= initial <= cap");
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

json GenerationParams::to_json() const {
  json j = {{"max_tokens", max_tokens}, {"temperature", temperature}};
  if (top_k) j["top_k"] = *top_k;
  if (top_p) j["top_p"] = *top_p;
  return j;
}

GenerationParams match_generation_defaults() { return {30, 0.0, 100, std::nullopt}; }

GenerationParams attr_generation_defaults() { return {500, 0.0, std::nullopt, 0.9}; }

json encode_score_request(std::span<const WirePair> pairs) {
  json arr = json::array();
  for (const auto& p : pairs) {
    arr.push_back({{"tokens", p.tokens}, {"left_text", p.left_text}, {"right_text", p.right_text}});
  }
  return {{"pairs", std::move(arr)}};
}

std::vector<double> decode_score_response(const std::string& body, std::size_t expected) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::exception& e) {
    throw ParseError(std::string("scoring response is not JSON: ") + e.what(), body);
  }
  if (!j.is_object() || !j.contains("scores") || !j["scores"].is_array()) {
    throw ParseError("scoring response lacks a \"scores\" array", body);
  }
  const auto& arr = j["scores"];
  if (arr.size() != expected) {
    throw ParseError("scoring response has " + std::to_string(arr.size()) + " scores for " +
                         std::to_string(expected) + " pairs",
                     body);
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw ParseError("non-numeric score in scoring response", body);
    double p = v.get<double>();
    if (!(p >= 0.0 && p <= 1.0)) throw ParseError("score outside [0, 1] in scoring response", body);
    out.push_back(p);
  }
  return out;
}

json encode_completion_request(const std::string& prompt, const GenerationParams& params) {
  return {{"prompt", prompt}, {"params", params.to_json()}};
}

std::string decode_completion_response(const std::string& body) {
  try {
    json j = json::parse(body);
    if (j.is_object() && j.contains("completion") && j["completion"].is_string()) {
      return j["completion"].get<std::string>();
    }
  } catch (const json::exception&) {
  }
  throw ParseError("completion response lacks a \"completion\" string", body);
}

namespace {

std::string attempt_post(const Endpoint& endpoint, const ParsedUrl& url, const std::string& body) {
  httplib::Client client(url.host, url.port);
  auto timeout = std::chrono::milliseconds(endpoint.timeout_ms);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  auto res = client.Post(url.path, body, "application/json");
  if (!res) {
    throw AttemptFailure("request to " + endpoint.url + " failed: " + httplib::to_string(res.error()),
                         true);
  }
  if (res->status >= 500) {
    throw AttemptFailure("server error " + std::to_string(res->status) + " from " + endpoint.url, true);
  }
  if (res->status >= 400) {
    throw AttemptFailure("request rejected with " + std::to_string(res->status) + " by " +
                             endpoint.url + ": " + res->body,
                         false);
  }
  return res->body;
}

}  // namespace

std::string post_json(const Endpoint& endpoint, const std::string& body) {
  ParsedUrl url = parse_endpoint_url(endpoint.url);
  int delay = endpoint.backoff_initial_ms;
  for (int attempt = 1;; ++attempt) {
    try {
      return attempt_post(endpoint, url, body);
    } catch (const AttemptFailure& f) {
      if (!f.retryable() || attempt >= endpoint.max_attempts) {
        throw TransportError(f.what(), attempt, f.retryable());
      }
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(delay));
    delay = std::min(delay * 2, endpoint.backoff_cap_ms);
  }
}

HttpScoringClient::HttpScoringClient(Endpoint endpoint) : endpoint_(std::move(endpoint)) {
  validate(endpoint_);
}

std::vector<double> HttpScoringClient::score_batch(std::span<const WirePair> pairs) {
  std::string body = post_json(endpoint_, encode_score_request(pairs).dump());
  return decode_score_response(body, pairs.size());
}

HttpCompletionClient::HttpCompletionClient(Endpoint endpoint) : endpoint_(std::move(endpoint)) {
  validate(endpoint_);
}

std::string HttpCompletionClient::complete(const std::string& prompt, const GenerationParams& params) {
  return decode_completion_response(post_json(endpoint_, encode_completion_request(prompt, params).dump()));
}

}  // namespace varm::match
