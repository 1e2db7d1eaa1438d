#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "varm/catalog/store.hpp"
#include "varm/pairforge/serialize.hpp"
#include "varm/pairforge/split.hpp"

namespace varm::pairforge {

struct PairRecord {
  LabeledPair pair;
  std::string split;  // "train" or "eval"
  SerializedPair serialized;
  std::string left_text;
  std::string right_text;

  bool operator==(const PairRecord&) const = default;
};

struct PairFile {
  nlohmann::json meta;  // first line of the file
  std::size_t budget = 0;
  std::string tokenizer_id;
  std::uint64_t seed = 0;
  std::vector<PairRecord> records;
};

// One metadata line {"record":"meta","budget","tokenizer_id","seed",...} then
// one line per pair, train before eval. `extra_meta` keys are merged into the
// metadata line. Records are streamed; nothing is buffered per file.
void export_pairs(const catalog::CatalogStore& store, const DatasetSplit& split,
                  const Tokenizer& tokenizer, std::size_t budget, std::ostream& out,
                  const nlohmann::json& extra_meta = nlohmann::json::object());
void export_pairs(const catalog::CatalogStore& store, const DatasetSplit& split,
                  const Tokenizer& tokenizer, std::size_t budget,
                  const std::filesystem::path& path,
                  const nlohmann::json& extra_meta = nlohmann::json::object());

nlohmann::json to_json(const PairRecord& record);
PairRecord pair_record_from_json(const nlohmann::json& j, std::size_t budget);

PairFile read_pairs(std::istream& in);
PairFile read_pairs(const std::filesystem::path& path);

}  // namespace varm::pairforge
