#include "varm/matchkit/scorer.hpp"

#include <algorithm>

#include "varm/common/errors.hpp"
#include "varm/common/parallel.hpp"
#include "varm/matchkit/baseline.hpp"
#include "varm/matchkit/prompt.hpp"
#include "varm/matchkit/response.hpp"
#include "varm/pairforge/serialize.hpp"

namespace varm::match {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const pairforge::Tokenizer& tokenizer_of(const RemoteBackend& b) {
  static const pairforge::BasicTokenizer basic;
  return b.tokenizer ? *b.tokenizer : basic;
}

std::shared_ptr<ScoringClient> client_of(const RemoteBackend& b) {
  return b.client ? b.client : std::make_shared<HttpScoringClient>(b.endpoint);
}

std::shared_ptr<CompletionClient> client_of(const GenerativeBackend& b) {
  return b.client ? b.client : std::make_shared<HttpCompletionClient>(b.endpoint);
}

WirePair to_wire(const RemoteBackend& b, const catalog::Product& l, const catalog::Product& r) {
  return {pairforge::serialize_pair(l, r, tokenizer_of(b), b.budget).tokens,
          pairforge::product_text(l), pairforge::product_text(r)};
}

MatchScore generative_score(CompletionClient& client, const GenerationParams& params,
                            const catalog::Product& l, const catalog::Product& r) {
  MatchVerdict v = parse_match_response(client.complete(build_match_prompt(l, r), params));
  return {v.similarity, ScoreSource::kGenerative, v, false};
}

std::string describe(const std::exception& e) {
  if (const auto* t = dynamic_cast<const TransportError*>(&e)) {
    return std::string(e.what()) + " (after " + std::to_string(t->attempts()) + " attempts)";
  }
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    return std::string(e.what()) + "; raw: " + p->raw();
  }
  return e.what();
}

}  // namespace

OracleTable OracleTable::from_store(const catalog::CatalogStore& store) {
  std::map<std::string, std::string, std::less<>> group_of;
  for (const auto& [gid, g] : store.groups()) {
    for (const auto& m : g.member_ids) group_of.emplace(m, gid);
  }
  return OracleTable(std::move(group_of));
}

double OracleTable::score(std::string_view a, std::string_view b) const {
  auto ia = group_of_.find(a), ib = group_of_.find(b);
  return ia != group_of_.end() && ib != group_of_.end() && ia->second == ib->second ? 1.0 : 0.0;
}

std::string backend_id(const ClassifierHandle& handle) {
  return std::visit(overloaded{[](const BaselineBackend&) { return std::string("baseline"); },
                               [](const OracleBackend&) { return std::string("oracle"); },
                               [](const RemoteBackend& b) { return "remote:" + b.endpoint.url; },
                               [](const GenerativeBackend& b) { return "generative:" + b.endpoint.url; }},
                    handle);
}

MatchScore score_pair(const ClassifierHandle& handle, const catalog::Product& left,
                      const catalog::Product& right) {
  return std::visit(
      overloaded{
          [&](const BaselineBackend&) {
            auto r = baseline_similarity(left, right);
            return MatchScore{r.score, ScoreSource::kBaseline, std::nullopt, r.degenerate};
          },
          [&](const OracleBackend& b) {
            return MatchScore{b.table.score(left.product_id, right.product_id), ScoreSource::kOracle,
                              std::nullopt, false};
          },
          [&](const RemoteBackend& b) {
            WirePair w = to_wire(b, left, right);
            auto scores = client_of(b)->score_batch(std::span(&w, 1));
            return MatchScore{scores.at(0), ScoreSource::kRemote, std::nullopt, false};
          },
          [&](const GenerativeBackend& b) {
            return generative_score(*client_of(b), b.params, left, right);
          }},
      handle);
}

std::vector<MatchResult> score_pairs(const ClassifierHandle& handle,
                                     const catalog::CatalogStore& store,
                                     std::span<const pairforge::LabeledPair> pairs,
                                     std::size_t workers) {
  std::vector<MatchResult> out(pairs.size());
  auto products = [&](std::size_t i) {
    return std::pair<const catalog::Product&, const catalog::Product&>(
        store.product(pairs[i].left_id), store.product(pairs[i].right_id));
  };

  if (const auto* remote = std::get_if<RemoteBackend>(&handle)) {
    auto client = client_of(*remote);
    const std::size_t batch = std::max<std::size_t>(1, remote->batch_size);
    const std::size_t n_batches = (pairs.size() + batch - 1) / batch;
    auto in_flight = std::min<std::size_t>(workers, static_cast<std::size_t>(remote->endpoint.max_in_flight));
    parallel_for(n_batches, in_flight, [&](std::size_t bi) {
      std::size_t lo = bi * batch, hi = std::min(pairs.size(), lo + batch);
      std::vector<WirePair> wire;
      for (std::size_t i = lo; i < hi; ++i) {
        auto [l, r] = products(i);
        wire.push_back(to_wire(*remote, l, r));
      }
      try {
        auto scores = client->score_batch(wire);
        for (std::size_t i = lo; i < hi; ++i) {
          out[i].score = MatchScore{scores[i - lo], ScoreSource::kRemote, std::nullopt, false};
        }
      } catch (const Error& e) {
        for (std::size_t i = lo; i < hi; ++i) out[i].error = describe(e);
      }
    });
    return out;
  }

  std::size_t threads = workers;
  std::shared_ptr<CompletionClient> completion;
  const GenerativeBackend* generative = std::get_if<GenerativeBackend>(&handle);
  if (generative) {
    completion = client_of(*generative);
    threads = std::min<std::size_t>(workers, static_cast<std::size_t>(generative->endpoint.max_in_flight));
  }
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    auto [l, r] = products(i);
    try {
      out[i].score = generative ? generative_score(*completion, generative->params, l, r)
                                : score_pair(handle, l, r);
    } catch (const Error& e) {
      out[i].error = describe(e);
    }
  });
  return out;
}

}  // namespace varm::match
