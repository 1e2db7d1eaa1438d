#include "run_config.hpp"

#include <algorithm>

#include "varm/common/digest.hpp"
#include "varm/common/errors.hpp"
#include "varm/version.hpp"

namespace varm::cli {

using nlohmann::json;

namespace {

class Reader {
 public:
  Reader(const json& j, std::string prefix, std::vector<std::string>& errors)
      : j_(j), prefix_(std::move(prefix)), errors_(errors) {}

  template <class T>
  void read(const char* key, T& out) {
    seen_.push_back(key);
    auto it = j_.find(key);
    if (it == j_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception&) {
      errors_.push_back(name(key) + ": wrong type");
    }
  }

  template <class T>
  void read_optional(const char* key, std::optional<T>& out) {
    seen_.push_back(key);
    auto it = j_.find(key);
    if (it == j_.end()) return;
    if (it->is_null()) {
      out.reset();
      return;
    }
    try {
      out = it->template get<T>();
    } catch (const json::exception&) {
      errors_.push_back(name(key) + ": wrong type");
    }
  }

  const json* object(const char* key) {
    seen_.push_back(key);
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    if (!it->is_object()) {
      errors_.push_back(name(key) + ": expected an object");
      return nullptr;
    }
    return &*it;
  }

  std::string name(const std::string& key) const { return prefix_.empty() ? key : prefix_ + "." + key; }

  void reject_unknown() {
    for (const auto& [k, v] : j_.items()) {
      if (std::find(seen_.begin(), seen_.end(), k) == seen_.end()) {
        errors_.push_back(name(k) + ": unknown key");
      }
    }
  }

 private:
  const json& j_;
  std::string prefix_;
  std::vector<std::string>& errors_;
  std::vector<std::string> seen_;
};

void read_endpoint(Reader& parent, const char* key, match::Endpoint& ep, std::size_t* batch,
                   std::vector<std::string>& errors) {
  const json* sub = parent.object(key);
  if (!sub) return;
  Reader r(*sub, parent.name(key), errors);
  r.read("url", ep.url);
  r.read("timeout_ms", ep.timeout_ms);
  r.read("max_attempts", ep.max_attempts);
  r.read("max_in_flight", ep.max_in_flight);
  r.read("backoff_initial_ms", ep.backoff_initial_ms);
  r.read("backoff_cap_ms", ep.backoff_cap_ms);
  if (batch) r.read("batch_size", *batch);
  r.reject_unknown();
}

void read_generation(Reader& parent, const char* key, match::GenerationParams& p,
                     std::vector<std::string>& errors) {
  const json* sub = parent.object(key);
  if (!sub) return;
  Reader r(*sub, parent.name(key), errors);
  r.read("max_tokens", p.max_tokens);
  r.read("temperature", p.temperature);
  r.read_optional("top_k", p.top_k);
  r.read_optional("top_p", p.top_p);
  r.reject_unknown();
}

void check_generation(const std::string& name, const match::GenerationParams& p,
                      std::vector<std::string>& v) {
  if (p.max_tokens <= 0) v.push_back(name + ".max_tokens: must be > 0");
  if (!(p.temperature >= 0)) v.push_back(name + ".temperature: must be >= 0");
  if (p.top_k && *p.top_k <= 0) v.push_back(name + ".top_k: must be > 0");
  if (p.top_p && !(*p.top_p > 0 && *p.top_p <= 1)) v.push_back(name + ".top_p: must be in (0, 1]");
}

void check_endpoint(const std::string& name, const match::Endpoint& ep, const char* env,
                    std::vector<std::string>& v) {
  if (ep.url.empty()) {
    v.push_back(name + ".url: required (or set " + env + ")");
    return;
  }
  try {
    match::validate(ep);
  } catch (const Error& e) {
    v.push_back(name + ": " + e.what());
  }
}

json endpoint_json(const match::Endpoint& ep) {
  return {{"url", ep.url},
          {"timeout_ms", ep.timeout_ms},
          {"max_attempts", ep.max_attempts},
          {"max_in_flight", ep.max_in_flight},
          {"backoff_initial_ms", ep.backoff_initial_ms},
          {"backoff_cap_ms", ep.backoff_cap_ms}};
}

json generation_json(const match::GenerationParams& p) {
  return {{"max_tokens", p.max_tokens},
          {"temperature", p.temperature},
          {"top_k", p.top_k ? json(*p.top_k) : json(nullptr)},
          {"top_p", p.top_p ? json(*p.top_p) : json(nullptr)}};
}

}  // namespace

std::vector<std::string> apply_json(RunConfig& cfg, const json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) return {"config: expected a JSON object"};
  Reader r(j, "", errors);
  r.read("seed", cfg.seed);
  if (const json* s = r.object("synth")) {
    try {
      cfg.synth = catalog::synth_spec_from_json(*s);
    } catch (const ValidationError& e) {
      for (const auto& m : e.violations()) errors.push_back("synth." + m);
    } catch (const Error& e) {
      errors.push_back(std::string("synth: ") + e.what());
    } catch (const json::exception&) {
      errors.push_back("synth: wrong type");
    }
  }
  std::string sampler = pairforge::to_string(cfg.dataset.sampler);
  r.read("sampler", sampler);
  try {
    cfg.dataset.sampler = pairforge::parse_sampler(sampler);
  } catch (const Error& e) {
    errors.push_back(std::string("sampler: ") + e.what());
  }
  if (const json* m = r.object("mix")) {
    Reader mr(*m, "mix", errors);
    mr.read("hard", cfg.dataset.mix.hard);
    mr.read("medium", cfg.dataset.mix.medium);
    mr.read("easy", cfg.dataset.mix.easy);
    mr.reject_unknown();
  }
  r.read("negatives_per_positive", cfg.dataset.negatives_per_positive);
  r.read("split_ratio", cfg.dataset.ratio);
  r.read("balance", cfg.dataset.balance);
  r.read("token_budget", cfg.token_budget);
  r.read("backend", cfg.backend);
  r.read("threshold", cfg.threshold);
  read_endpoint(r, "remote", cfg.remote, &cfg.remote_batch_size, errors);
  read_endpoint(r, "generative", cfg.generative, nullptr, errors);
  read_generation(r, "match_generation", cfg.match_generation, errors);
  read_generation(r, "attr_generation", cfg.attr_generation, errors);
  r.read("attr_method", cfg.attr_method);
  r.read("rag", cfg.rag);
  r.read("curve_sizes", cfg.curve_sizes);
  r.read("workers", cfg.workers);
  r.reject_unknown();
  return errors;
}

void validate(const RunConfig& cfg, const std::string& command) {
  std::vector<std::string> v;
  if (command == "synth") {
    try {
      catalog::validate(cfg.synth);
    } catch (const ValidationError& e) {
      for (const auto& m : e.violations()) v.push_back("synth." + m);
    }
  }
  try {
    pairforge::validate(cfg.dataset.mix);
  } catch (const ValidationError& e) {
    v.insert(v.end(), e.violations().begin(), e.violations().end());
  }
  if (!(cfg.dataset.negatives_per_positive >= 0)) {
    v.push_back("negatives_per_positive: must be >= 0");
  }
  if (!(cfg.dataset.ratio > 0 && cfg.dataset.ratio < 1)) v.push_back("split_ratio: must be in (0, 1)");
  if (cfg.token_budget < 8) v.push_back("token_budget: must be >= 8");
  static const std::vector<std::string> kBackends = {"baseline", "oracle", "remote", "generative"};
  if (std::find(kBackends.begin(), kBackends.end(), cfg.backend) == kBackends.end()) {
    v.push_back("backend: must be one of baseline, oracle, remote, generative");
  }
  if (!(cfg.threshold >= 0 && cfg.threshold <= 1)) v.push_back("threshold: must be in [0, 1]");
  if (cfg.remote_batch_size == 0) v.push_back("remote.batch_size: must be > 0");
  check_generation("match_generation", cfg.match_generation, v);
  check_generation("attr_generation", cfg.attr_generation, v);
  if (cfg.attr_method != "heuristic" && cfg.attr_method != "generative") {
    v.push_back("attr_method: must be heuristic or generative");
  }
  if (cfg.workers == 0) v.push_back("workers: must be > 0");

  bool scoring = command == "match" || command == "curve";
  if (scoring && cfg.backend == "remote") check_endpoint("remote", cfg.remote, kRemoteEndpointEnv, v);
  if ((scoring && cfg.backend == "generative") ||
      (command == "attrs" && cfg.attr_method == "generative")) {
    check_endpoint("generative", cfg.generative, kGenerativeEndpointEnv, v);
  }
  if (command == "curve") {
    if (cfg.curve_sizes.empty()) v.push_back("curve_sizes: must not be empty");
    for (std::size_t i = 0; i < cfg.curve_sizes.size(); ++i) {
      if (cfg.curve_sizes[i] == 0) v.push_back("curve_sizes: entries must be > 0");
      if (i && cfg.curve_sizes[i] < cfg.curve_sizes[i - 1]) {
        v.push_back("curve_sizes: must be ascending");
      }
    }
  }
  if (!v.empty()) throw ValidationError(std::move(v));
}

json resolved_json(const RunConfig& cfg) {
  json remote = endpoint_json(cfg.remote);
  remote["batch_size"] = cfg.remote_batch_size;
  return {{"seed", cfg.seed},
          {"synth", catalog::to_json(cfg.synth)},
          {"sampler", pairforge::to_string(cfg.dataset.sampler)},
          {"mix",
           {{"hard", cfg.dataset.mix.hard},
            {"medium", cfg.dataset.mix.medium},
            {"easy", cfg.dataset.mix.easy}}},
          {"negatives_per_positive", cfg.dataset.negatives_per_positive},
          {"split_ratio", cfg.dataset.ratio},
          {"balance", cfg.dataset.balance},
          {"token_budget", cfg.token_budget},
          {"backend", cfg.backend},
          {"threshold", cfg.threshold},
          {"remote", remote},
          {"generative", endpoint_json(cfg.generative)},
          {"match_generation", generation_json(cfg.match_generation)},
          {"attr_generation", generation_json(cfg.attr_generation)},
          {"attr_method", cfg.attr_method},
          {"rag", cfg.rag},
          {"curve_sizes", cfg.curve_sizes}};
}

std::string config_digest(const RunConfig& cfg) { return digest_hex(resolved_json(cfg).dump()); }

json artifact_meta(const RunConfig& cfg, const std::string& command) {
  return {{"record", "meta"},
          {"command", command},
          {"tool_version", kToolVersion},
          {"config_digest", config_digest(cfg)},
          {"config", resolved_json(cfg)}};
}

}  // namespace varm::cli
