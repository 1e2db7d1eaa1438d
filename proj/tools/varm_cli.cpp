#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "run_config.hpp"
#include "varm/attrkit/heuristic.hpp"
#include "varm/attrkit/identify.hpp"
#include "varm/catalog/ingest.hpp"
#include "varm/catalog/synth.hpp"
#include "varm/common/errors.hpp"
#include "varm/evalkit/attr_metrics.hpp"
#include "varm/evalkit/curve.hpp"
#include "varm/evalkit/metrics.hpp"
#include "varm/evalkit/report.hpp"
#include "varm/matchkit/scorer.hpp"
#include "varm/pairforge/export.hpp"
#include "varm/pairforge/tokenizer.hpp"

namespace {

using nlohmann::json;
using namespace varm;

struct Flags {
  std::string config;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
  std::string out;
  std::string catalog;
  std::string pairs;
  std::string scores;
  std::string attrs;
  std::string csv;
  std::string split = "eval";
  std::string experiment = "default";
  std::string backend;
  std::string sampler;
  std::string method;
  double ratio = 0;
  std::size_t budget = 0;
  double threshold = 0;
  bool rag = false;
  std::vector<std::size_t> sizes;
  std::vector<std::string> groups;
};

bool given(const CLI::App* sub, const std::string& name) {
  const auto* opt = sub->get_option_no_throw(name);
  return opt && opt->count() > 0;
}

cli::RunConfig load_config(const Flags& f, const CLI::App* sub, const std::string& command) {
  cli::RunConfig cfg;
  std::vector<std::string> errors;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw InputError("cannot open config file " + f.config);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw InputError("config file " + f.config + " is not valid JSON: " + e.what());
    }
    errors = cli::apply_json(cfg, j);
  }
  if (const char* env = std::getenv(cli::kRemoteEndpointEnv); env && *env) cfg.remote.url = env;
  if (const char* env = std::getenv(cli::kGenerativeEndpointEnv); env && *env) cfg.generative.url = env;
  if (given(sub, "--seed")) cfg.seed = f.seed;
  if (given(sub, "--workers")) cfg.workers = f.workers;
  if (given(sub, "--backend")) cfg.backend = f.backend;
  if (given(sub, "--method")) cfg.attr_method = f.method;
  if (given(sub, "--ratio")) cfg.dataset.ratio = f.ratio;
  if (given(sub, "--budget")) cfg.token_budget = f.budget;
  if (given(sub, "--threshold")) cfg.threshold = f.threshold;
  if (given(sub, "--rag")) cfg.rag = f.rag;
  if (given(sub, "--sizes")) cfg.curve_sizes = f.sizes;
  if (given(sub, "--sampler")) {
    try {
      cfg.dataset.sampler = pairforge::parse_sampler(f.sampler);
    } catch (const Error& e) {
      errors.push_back(std::string("sampler: ") + e.what());
    }
  }
  try {
    cli::validate(cfg, command);
  } catch (const ValidationError& e) {
    errors.insert(errors.end(), e.violations().begin(), e.violations().end());
  }
  if (!errors.empty()) throw ValidationError(std::move(errors));
  return cfg;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

catalog::CatalogStore load_store(const std::string& path) {
  auto report = catalog::ingest_catalog(std::filesystem::path(path));
  if (!report.errors.empty()) {
    std::ostringstream msg;
    msg << path << ": " << report.errors.size() << " malformed record(s), first at line "
        << report.errors.front().line << ": " << report.errors.front().message;
    throw InputError(msg.str());
  }
  return std::move(report.store);
}

std::vector<json> read_jsonl(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + what + " file " + path);
  std::vector<json> lines;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      lines.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw InputError(path + ":" + std::to_string(n) + ": invalid JSON: " + e.what());
    }
  }
  if (lines.empty() || lines.front().value("record", "") != "meta") {
    throw InputError(path + ": missing metadata record on the first line");
  }
  return lines;
}

match::ClassifierHandle make_backend(const cli::RunConfig& cfg, const catalog::CatalogStore& store) {
  if (cfg.backend == "oracle") return match::OracleBackend{match::OracleTable::from_store(store)};
  if (cfg.backend == "remote") {
    match::RemoteBackend b;
    b.endpoint = cfg.remote;
    b.budget = cfg.token_budget;
    b.batch_size = cfg.remote_batch_size;
    return b;
  }
  if (cfg.backend == "generative") {
    match::GenerativeBackend b;
    b.endpoint = cfg.generative;
    b.params = cfg.match_generation;
    return b;
  }
  return match::BaselineBackend{};
}

int cmd_ingest(const Flags& f, const cli::RunConfig& cfg) {
  auto report = catalog::ingest_catalog(std::filesystem::path(f.catalog));
  std::cout << "products " << report.store.products().size() << "\n"
            << "groups " << report.store.groups().size() << "\n"
            << "duplicate_records " << report.duplicate_records << "\n"
            << "meta_records " << report.meta_records << "\n"
            << "record_errors " << report.errors.size() << "\n";
  for (const auto& e : report.errors) std::cerr << f.catalog << ":" << e.line << ": " << e.message << "\n";
  if (!f.out.empty()) {
    auto out = open_out(f.out);
    catalog::write_catalog(report.store, out, cli::artifact_meta(cfg, "ingest"));
  }
  return report.errors.empty() ? 0 : 2;
}

int cmd_synth(const Flags& f, const cli::RunConfig& cfg) {
  auto store = catalog::synth_catalog(cfg.synth, cfg.seed);
  auto out = open_out(f.out);
  catalog::write_catalog(store, out, cli::artifact_meta(cfg, "synth"));
  std::cout << "products " << store.products().size() << "\ngroups " << store.groups().size() << "\n";
  return 0;
}

int cmd_pairs(const Flags& f, const cli::RunConfig& cfg) {
  auto store = load_store(f.catalog);
  auto dataset = pairforge::build_dataset(store, cfg.dataset, cfg.seed);
  pairforge::BasicTokenizer tokenizer;
  auto meta = cli::artifact_meta(cfg, "pairs");
  meta.erase("record");
  meta["bucket_tally"] = dataset.bucket_tally;
  auto out = open_out(f.out);
  pairforge::export_pairs(store, dataset.split, tokenizer, cfg.token_budget, out, meta);
  std::cout << "positives " << dataset.positives << "\n";
  for (const auto& [bucket, n] : dataset.bucket_tally) std::cout << bucket << " " << n << "\n";
  std::cout << "train " << dataset.split.train.size() << "\neval " << dataset.split.eval.size()
            << "\ndropped_cross_split " << dataset.split.dropped_cross_split
            << "\ndropped_for_balance " << dataset.split.dropped_for_balance << "\n";
  return 0;
}

int cmd_match(const Flags& f, const cli::RunConfig& cfg) {
  if (f.split != "eval" && f.split != "train" && f.split != "all") {
    throw ValidationError({"split: must be eval, train or all"});
  }
  auto store = load_store(f.catalog);
  auto file = pairforge::read_pairs(std::filesystem::path(f.pairs));
  std::vector<pairforge::LabeledPair> pairs;
  for (const auto& r : file.records) {
    if (f.split == "all" || r.split == f.split) pairs.push_back(r.pair);
  }
  auto backend = make_backend(cfg, store);
  auto results = match::score_pairs(backend, store, pairs, cfg.workers);

  auto meta = cli::artifact_meta(cfg, "match");
  meta["backend"] = match::backend_id(backend);
  meta["split"] = f.split;
  meta["pairs_config_digest"] = file.meta.value("config_digest", "");
  auto out = open_out(f.out);
  out << meta.dump() << '\n';
  std::size_t failed = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    json j = {{"record", "score"},
              {"left_id", pairs[i].left_id},
              {"right_id", pairs[i].right_id},
              {"label", pairforge::to_string(pairs[i].label)},
              {"bucket", pairforge::to_string(pairs[i].bucket)}};
    if (const auto& s = results[i].score) {
      j["score"] = s->probability;
      j["source"] = match::to_string(s->source);
      j["degenerate"] = s->degenerate;
      if (s->verdict) {
        j["verdict"] = {{"label", pairforge::to_string(s->verdict->label)},
                        {"similarity", s->verdict->similarity},
                        {"default_used", s->verdict->default_used}};
      }
    } else {
      ++failed;
      j["score"] = nullptr;
      j["error"] = results[i].error;
    }
    out << j.dump() << '\n';
  }
  std::cout << "scored " << pairs.size() - failed << "\nfailed " << failed << "\n";
  return 0;
}

std::vector<std::string> selected_groups(const Flags& f, const catalog::CatalogStore& store,
                                         std::size_t& skipped) {
  std::vector<std::string> ids;
  if (!f.groups.empty()) {
    for (const auto& g : f.groups) {
      if (!store.find_group(g)) throw InputError("unknown group " + g);
      ids.push_back(g);
    }
    return ids;
  }
  for (const auto& [id, g] : store.groups()) {
    if (g.member_ids.size() >= 2) {
      ids.push_back(id);
    } else {
      ++skipped;
    }
  }
  return ids;
}

int cmd_attrs(const Flags& f, const cli::RunConfig& cfg) {
  auto store = load_store(f.catalog);
  std::size_t skipped = 0;
  auto ids = selected_groups(f, store, skipped);
  auto meta = cli::artifact_meta(cfg, "attrs");
  meta["singleton_groups_skipped"] = skipped;
  auto out = open_out(f.out);
  out << meta.dump() << '\n';
  std::size_t failed = 0;
  if (cfg.attr_method == "heuristic") {
    for (const auto& id : ids) {
      auto members = store.members(store.groups().find(id)->second);
      out << attrs::report_line(id, attrs::heuristic_labels(std::span(members))).dump() << '\n';
    }
  } else {
    match::HttpCompletionClient client(cfg.generative);
    auto outcomes = attrs::identify_groups(client, store, ids, cfg.rag, cfg.attr_generation, cfg.workers);
    std::string method = cfg.rag ? "generative+rag" : "generative";
    for (const auto& o : outcomes) {
      if (!o.result) ++failed;
      out << attrs::report_line(o, method).dump() << '\n';
    }
  }
  std::cout << "groups " << ids.size() << "\nfailed " << failed << "\nsingletons_skipped " << skipped
            << "\n";
  return 0;
}

json class_json(const eval::ClassAccuracy& c) {
  auto a = c.accuracy();
  return {{"correct", c.correct}, {"total", c.total}, {"accuracy", a ? json(*a) : json(nullptr)}};
}

int eval_attrs(const Flags& f, const cli::RunConfig& cfg) {
  if (f.catalog.empty()) throw InputError("--catalog is required to evaluate an attribute report");
  auto store = load_store(f.catalog);
  auto lines = read_jsonl(f.attrs, "attribute report");
  eval::RecallTally recall;
  eval::AttrAccuracy acc;
  std::size_t failed = 0, no_gold = 0;
  json near_misses = json::array();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.contains("error")) {
      ++failed;
      continue;
    }
    auto gid = line.at("group_id").get<std::string>();
    const auto* group = store.find_group(gid);
    if (!group) throw InputError("attribute report names unknown group " + gid);
    if (!group->gold_variation_keys) {
      ++no_gold;
      continue;
    }
    attrs::AttrLabels predicted;
    std::vector<std::string> predicted_variation;
    for (const auto& [k, v] : line.at("labels").items()) {
      auto label = attrs::parse_attr_label(v.get<std::string>());
      predicted[k] = label;
      if (label == attrs::AttrLabel::kVariation) predicted_variation.push_back(k);
    }
    const auto& gold_keys = *group->gold_variation_keys;
    auto r = eval::variation_recall(predicted_variation, gold_keys);
    recall.add(r);
    for (const auto& [p, g] : r.near_misses) near_misses.push_back({{"group_id", gid}, {"predicted", p}, {"gold", g}});

    attrs::AttrLabels gold;
    for (const auto* m : store.members(*group)) {
      for (const auto& a : m->attributes) gold[a.key] = attrs::AttrLabel::kCommon;
    }
    for (const auto& k : gold_keys) gold[k] = attrs::AttrLabel::kVariation;
    auto a = eval::attr_accuracy(predicted, gold);
    for (auto [dst, src] : {std::pair{&acc.common, &a.common}, std::pair{&acc.variation, &a.variation},
                            std::pair{&acc.overall, &a.overall}}) {
      dst->correct += src->correct;
      dst->total += src->total;
    }
  }
  auto mean = recall.mean();
  json report = {{"meta", cli::artifact_meta(cfg, "eval")},
                 {"kind", "attrs"},
                 {"report_config_digest", lines.front().value("config_digest", "")},
                 {"variation_recall", mean ? json(*mean) : json(nullptr)},
                 {"recall_groups", recall.groups},
                 {"recall_skipped", recall.skipped},
                 {"near_misses", near_misses},
                 {"accuracy",
                  {{"common", class_json(acc.common)},
                   {"variation", class_json(acc.variation)},
                   {"overall", class_json(acc.overall)}}},
                 {"failed_groups", failed},
                 {"groups_without_gold", no_gold}};
  report["meta"].erase("record");
  auto out = open_out(f.out);
  out << report.dump(2) << '\n';
  std::cout << "variation_recall " << (mean ? std::to_string(*mean) : "n/a") << "\n";
  return 0;
}

int eval_scores(const Flags& f, const cli::RunConfig& cfg) {
  auto lines = read_jsonl(f.scores, "scores");
  std::vector<match::MatchScore> scores;
  std::vector<pairforge::PairLabel> gold;
  std::size_t skipped = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.contains("error") || line.at("score").is_null()) {
      ++skipped;
      continue;
    }
    match::MatchScore s;
    s.probability = line.at("score").get<double>();
    s.degenerate = line.value("degenerate", false);
    if (line.contains("verdict")) {
      const auto& v = line.at("verdict");
      s.verdict = match::MatchVerdict{pairforge::parse_label(v.at("label").get<std::string>()),
                                      v.at("similarity").get<double>(),
                                      v.value("default_used", false)};
    }
    scores.push_back(s);
    gold.push_back(pairforge::parse_label(line.at("label").get<std::string>()));
  }
  auto metrics = eval::evaluate_scores(scores, gold, cfg.threshold);
  metrics.config_digest = cli::config_digest(cfg);
  json report = {{"meta", cli::artifact_meta(cfg, "eval")},
                 {"kind", "match"},
                 {"experiment", f.experiment},
                 {"scores_config_digest", lines.front().value("config_digest", "")},
                 {"backend", lines.front().value("backend", "")},
                 {"metrics", eval::to_json(metrics)},
                 {"skipped", skipped}};
  report["meta"].erase("record");
  auto out = open_out(f.out);
  out << report.dump(2) << '\n';
  if (!f.csv.empty()) {
    auto csv = open_out(f.csv);
    csv << eval::metrics_csv_header() << '\n'
        << eval::metrics_csv_row(f.experiment, metrics, cfg.seed, skipped) << '\n';
  }
  std::cout << eval::metrics_csv_header() << '\n'
            << eval::metrics_csv_row(f.experiment, metrics, cfg.seed, skipped) << '\n';
  return 0;
}

int cmd_eval(const Flags& f, const cli::RunConfig& cfg) {
  if (f.scores.empty() == f.attrs.empty()) {
    throw InputError("eval needs exactly one of --scores or --attrs");
  }
  return f.scores.empty() ? eval_attrs(f, cfg) : eval_scores(f, cfg);
}

int cmd_curve(const Flags& f, const cli::RunConfig& cfg) {
  auto store = load_store(f.catalog);
  auto backend = make_backend(cfg, store);
  auto points = eval::learning_curve(store, cfg.dataset, cfg.curve_sizes, backend, cfg.seed,
                                     cfg.threshold, {}, cfg.workers);
  auto digest = cli::config_digest(cfg);
  auto out = open_out(f.out);
  out << eval::curve_csv_header() << '\n';
  std::cout << eval::curve_csv_header() << '\n';
  for (auto& p : points) {
    p.metrics.config_digest = digest;
    auto row = eval::curve_csv_row(p, cfg.seed);
    out << row << '\n';
    std::cout << row << '\n';
  }
  return 0;
}

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kInput: return 2;
    case ErrorCategory::kValidation: return 3;
    case ErrorCategory::kParse: return 4;
    case ErrorCategory::kTransport: return 5;
    case ErrorCategory::kInternal: return 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"varm: variant product matching and variation attribute toolkit"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "JSON run config")->check(CLI::ExistingFile);
    sub->add_option("--seed", f.seed, "RNG seed (overrides config)");
    sub->add_option("--workers", f.workers, "parallelism bound (overrides config)");
  };
  auto backend_flags = [&](CLI::App* sub) {
    sub->add_option("--backend", f.backend, "baseline | oracle | remote | generative");
    sub->add_option("--threshold", f.threshold, "decision threshold");
  };
  auto dataset_flags = [&](CLI::App* sub) {
    sub->add_option("--sampler", f.sampler, "informed | random");
    sub->add_option("--ratio", f.ratio, "train share of the split");
  };

  auto* ingest = app.add_subcommand("ingest", "validate and normalize a catalog");
  common(ingest);
  ingest->add_option("--catalog", f.catalog, "catalog JSONL")->required();
  ingest->add_option("--out", f.out, "write the normalized catalog here");

  auto* synth = app.add_subcommand("synth", "generate a synthetic catalog");
  common(synth);
  synth->add_option("--out", f.out, "catalog JSONL to write")->required();

  auto* pairs = app.add_subcommand("pairs", "build, split and export a labeled pair dataset");
  common(pairs);
  dataset_flags(pairs);
  pairs->add_option("--budget", f.budget, "token budget per serialized pair");
  pairs->add_option("--catalog", f.catalog, "catalog JSONL")->required();
  pairs->add_option("--out", f.out, "pair file to write")->required();

  auto* match_cmd = app.add_subcommand("match", "score an exported pair file");
  common(match_cmd);
  backend_flags(match_cmd);
  match_cmd->add_option("--catalog", f.catalog, "catalog JSONL")->required();
  match_cmd->add_option("--pairs", f.pairs, "pair file")->required();
  match_cmd->add_option("--split", f.split, "eval | train | all");
  match_cmd->add_option("--out", f.out, "score file to write")->required();

  auto* attrs_cmd = app.add_subcommand("attrs", "label group attributes as variation or common");
  common(attrs_cmd);
  attrs_cmd->add_option("--method", f.method, "heuristic | generative");
  attrs_cmd->add_flag("--rag", f.rag, "add retrieved variation context to the prompt");
  attrs_cmd->add_option("--catalog", f.catalog, "catalog JSONL")->required();
  attrs_cmd->add_option("--groups", f.groups, "restrict to these group ids")->delimiter(',');
  attrs_cmd->add_option("--out", f.out, "attribute report to write")->required();

  auto* eval_cmd = app.add_subcommand("eval", "compute metrics from a score file or attribute report");
  common(eval_cmd);
  eval_cmd->add_option("--threshold", f.threshold, "decision threshold");
  eval_cmd->add_option("--scores", f.scores, "score file from `match`");
  eval_cmd->add_option("--attrs", f.attrs, "report from `attrs`");
  eval_cmd->add_option("--catalog", f.catalog, "catalog with gold keys (attribute reports)");
  eval_cmd->add_option("--experiment", f.experiment, "experiment name for the CSV row");
  eval_cmd->add_option("--csv", f.csv, "also write a one-row CSV");
  eval_cmd->add_option("--out", f.out, "JSON report to write")->required();

  auto* curve = app.add_subcommand("curve", "learning curve over train sizes");
  common(curve);
  dataset_flags(curve);
  backend_flags(curve);
  curve->add_option("--sizes", f.sizes, "ascending train sizes")->delimiter(',');
  curve->add_option("--catalog", f.catalog, "catalog JSONL")->required();
  curve->add_option("--out", f.out, "CSV to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    auto cfg = load_config(f, sub, command);
    if (command == "ingest") return cmd_ingest(f, cfg);
    if (command == "synth") return cmd_synth(f, cfg);
    if (command == "pairs") return cmd_pairs(f, cfg);
    if (command == "match") return cmd_match(f, cfg);
    if (command == "attrs") return cmd_attrs(f, cfg);
    if (command == "eval") return cmd_eval(f, cfg);
    if (command == "curve") return cmd_curve(f, cfg);
  } catch (const ValidationError& e) {
    std::cerr << "error[validation]:\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return exit_code(e.category());
  } catch (const Error& e) {
    std::cerr << "error[" << to_string(e.category()) << "]: " << e.what() << "\n";
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
