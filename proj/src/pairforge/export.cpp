#include "varm/pairforge/export.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "varm/common/errors.hpp"
#include "varm/common/text.hpp"

namespace varm::pairforge {

using nlohmann::json;

json to_json(const PairRecord& r) {
  json j;
  j["left_id"] = r.pair.left_id;
  j["right_id"] = r.pair.right_id;
  j["label"] = to_string(r.pair.label);
  j["bucket"] = to_string(r.pair.bucket);
  j["origin_group"] = r.pair.origin_group ? json(*r.pair.origin_group) : json(nullptr);
  j["split"] = r.split;
  j["tokens"] = r.serialized.tokens;
  j["left_token_count"] = r.serialized.left_token_count;
  j["right_token_count"] = r.serialized.right_token_count;
  j["truncated_left"] = r.serialized.truncated_left;
  j["truncated_right"] = r.serialized.truncated_right;
  j["left_text"] = r.left_text;
  j["right_text"] = r.right_text;
  return j;
}

PairRecord pair_record_from_json(const json& j, std::size_t budget) {
  try {
    PairRecord r;
    r.pair.left_id = j.at("left_id").get<std::string>();
    r.pair.right_id = j.at("right_id").get<std::string>();
    r.pair.label = parse_label(j.at("label").get<std::string>());
    r.pair.bucket = parse_bucket(j.at("bucket").get<std::string>());
    if (auto it = j.find("origin_group"); it != j.end() && !it->is_null()) {
      r.pair.origin_group = it->get<std::string>();
    }
    r.split = j.value("split", "");
    r.serialized.tokens = j.at("tokens").get<std::vector<std::string>>();
    r.serialized.left_token_count = j.value("left_token_count", std::size_t{0});
    r.serialized.right_token_count = j.value("right_token_count", std::size_t{0});
    r.serialized.truncated_left = j.value("truncated_left", false);
    r.serialized.truncated_right = j.value("truncated_right", false);
    r.left_text = j.value("left_text", "");
    r.right_text = j.value("right_text", "");
    if (budget && r.serialized.tokens.size() != budget) {
      throw InputError("pair " + r.pair.left_id + "/" + r.pair.right_id + " has " +
                       std::to_string(r.serialized.tokens.size()) + " tokens, expected " +
                       std::to_string(budget));
    }
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed pair record: ") + e.what());
  }
}

void export_pairs(const catalog::CatalogStore& store, const DatasetSplit& split,
                  const Tokenizer& tokenizer, std::size_t budget, std::ostream& out,
                  const json& extra_meta) {
  json meta = {{"record", "meta"},
               {"budget", budget},
               {"tokenizer_id", tokenizer.id()},
               {"seed", split.seed},
               {"ratio", split.ratio},
               {"train_pairs", split.train.size()},
               {"eval_pairs", split.eval.size()},
               {"dropped_cross_split", split.dropped_cross_split},
               {"dropped_for_balance", split.dropped_for_balance}};
  for (auto it = extra_meta.begin(); it != extra_meta.end(); ++it) meta[it.key()] = it.value();
  out << meta.dump() << '\n';

  auto emit = [&](const std::vector<LabeledPair>& pairs, const char* name) {
    for (const auto& p : pairs) {
      const auto& l = store.product(p.left_id);
      const auto& r = store.product(p.right_id);
      PairRecord rec{p, name, serialize_pair(l, r, tokenizer, budget), product_text(l),
                     product_text(r)};
      out << to_json(rec).dump() << '\n';
    }
  };
  emit(split.train, "train");
  emit(split.eval, "eval");
}

void export_pairs(const catalog::CatalogStore& store, const DatasetSplit& split,
                  const Tokenizer& tokenizer, std::size_t budget,
                  const std::filesystem::path& path, const json& extra_meta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write pair file '" + path.string() + "'");
  export_pairs(store, split, tokenizer, budget, out, extra_meta);
  out.flush();
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

PairFile read_pairs(std::istream& in) {
  PairFile file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw InputError("pair file line " + std::to_string(lineno) + ": " + e.what());
    }
    if (file.meta.is_null()) {
      if (j.value("record", "") != "meta") {
        throw InputError("pair file must start with a metadata record");
      }
      file.meta = j;
      file.budget = j.at("budget").get<std::size_t>();
      file.tokenizer_id = j.at("tokenizer_id").get<std::string>();
      file.seed = j.at("seed").get<std::uint64_t>();
      continue;
    }
    try {
      file.records.push_back(pair_record_from_json(j, file.budget));
    } catch (const InputError& e) {
      throw InputError("pair file line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (file.meta.is_null()) throw InputError("pair file is empty (no metadata record)");
  return file;
}

PairFile read_pairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open pair file '" + path.string() + "'");
  return read_pairs(in);
}

}  // namespace varm::pairforge
