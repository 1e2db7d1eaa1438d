#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "varm/catalog/store.hpp"

namespace varm::catalog {

enum class CatalogFormat { kJsonLines };

struct RecordError {
  std::size_t line;  // 1-based
  std::string message;
};

struct IngestReport {
  CatalogStore store;
  std::vector<RecordError> errors;
  std::size_t product_records = 0;  // valid, including idempotent duplicates
  std::size_t group_records = 0;
  std::size_t duplicate_records = 0;
  std::size_t meta_records = 0;
};

// Reads newline-delimited catalog records. Malformed lines are reported and
// skipped; conflicting duplicates and dangling group members throw
// InputError.
IngestReport ingest_catalog(std::istream& in, CatalogFormat format = CatalogFormat::kJsonLines);
IngestReport ingest_catalog(const std::filesystem::path& path,
                            CatalogFormat format = CatalogFormat::kJsonLines);

// Products sorted by id, then groups sorted by id. An optional metadata record
// is written first and ignored on ingest.
void write_catalog(const CatalogStore& store, std::ostream& out,
                   const std::optional<nlohmann::json>& meta = std::nullopt);
void write_catalog(const CatalogStore& store, const std::filesystem::path& path,
                   const std::optional<nlohmann::json>& meta = std::nullopt);

nlohmann::json to_json(const Product& product);
nlohmann::json to_json(const VariationGroup& group);

}  // namespace varm::catalog
