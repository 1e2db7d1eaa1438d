#include "varm/catalog/ingest.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "varm/common/errors.hpp"
#include "varm/common/text.hpp"

namespace varm::catalog {
namespace {

using nlohmann::json;

// Record-level problems; ingest reports them and moves on.
struct BadRecord {
  std::string message;
};

std::optional<std::string> optional_string(const json& rec, const char* field) {
  auto it = rec.find(field);
  if (it == rec.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw BadRecord{std::string("field '") + field + "' must be a string"};
  return it->get<std::string>();
}

std::string required_string(const json& rec, const char* field) {
  auto value = optional_string(rec, field);
  if (!value || trim(*value).empty()) {
    throw BadRecord{std::string("missing or empty '") + field + "'"};
  }
  return *value;
}

std::vector<std::string> string_array(const json& rec, const char* field) {
  auto it = rec.find(field);
  if (it == rec.end() || !it->is_array()) {
    throw BadRecord{std::string("field '") + field + "' must be an array of strings"};
  }
  std::vector<std::string> out;
  for (const auto& v : *it) {
    if (!v.is_string()) throw BadRecord{std::string("field '") + field + "' must hold strings"};
    out.push_back(v.get<std::string>());
  }
  return out;
}

Product parse_product(const json& rec) {
  std::string id = required_string(rec, "product_id");
  std::vector<Attribute> attrs;
  auto it = rec.find("attributes");
  if (it != rec.end() && !it->is_null()) {
    if (!it->is_array()) throw BadRecord{"field 'attributes' must be an array"};
    for (const auto& a : *it) {
      if (!a.is_object() || !a.contains("key") || !a.contains("value") ||
          !a["key"].is_string() || !a["value"].is_string()) {
        throw BadRecord{"each attribute must be {\"key\": string, \"value\": string}"};
      }
      attrs.push_back({a["key"].get<std::string>(), a["value"].get<std::string>()});
    }
  }
  try {
    return make_product(std::move(id), std::move(attrs), optional_string(rec, "brand"),
                        optional_string(rec, "product_type"), optional_string(rec, "source_url"));
  } catch (const InputError& e) {
    throw BadRecord{e.what()};
  }
}

VariationGroup parse_group(const json& rec) {
  VariationGroup g;
  g.group_id = required_string(rec, "group_id");
  g.member_ids = string_array(rec, "member_ids");
  if (g.member_ids.empty()) throw BadRecord{"group has no members"};
  auto it = rec.find("gold_variation_keys");
  if (it != rec.end() && !it->is_null()) g.gold_variation_keys = string_array(rec, "gold_variation_keys");
  return g;
}

}  // namespace

IngestReport ingest_catalog(std::istream& in, CatalogFormat /*format*/) {
  IngestReport report;
  CatalogBuilder builder;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      json rec = json::parse(line);
      if (!rec.is_object()) throw BadRecord{"record is not a JSON object"};
      auto kind = optional_string(rec, "record");
      if (!kind) throw BadRecord{"missing 'record' discriminator"};
      if (*kind == "product") {
        Product p = parse_product(rec);
        try {
          if (!builder.add_product(std::move(p))) ++report.duplicate_records;
        } catch (const InputError& e) {
          throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
        ++report.product_records;
      } else if (*kind == "group") {
        VariationGroup g = parse_group(rec);
        try {
          if (!builder.add_group(std::move(g))) ++report.duplicate_records;
        } catch (const InputError& e) {
          throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
        ++report.group_records;
      } else if (*kind == "meta") {
        ++report.meta_records;
      } else {
        throw BadRecord{"unknown record kind '" + *kind + "'"};
      }
    } catch (const json::exception& e) {
      report.errors.push_back({lineno, std::string("invalid JSON: ") + e.what()});
    } catch (const BadRecord& e) {
      report.errors.push_back({lineno, e.message});
    }
  }
  report.store = std::move(builder).build();
  return report;
}

IngestReport ingest_catalog(const std::filesystem::path& path, CatalogFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog file '" + path.string() + "'");
  return ingest_catalog(in, format);
}

json to_json(const Product& p) {
  json attrs = json::array();
  for (const auto& a : p.attributes) attrs.push_back({{"key", a.key}, {"value", a.value}});
  json j = {{"record", "product"}, {"product_id", p.product_id}};
  j["brand"] = p.brand ? json(*p.brand) : json(nullptr);
  j["product_type"] = p.product_type ? json(*p.product_type) : json(nullptr);
  j["attributes"] = std::move(attrs);
  j["source_url"] = p.source_url ? json(*p.source_url) : json(nullptr);
  return j;
}

json to_json(const VariationGroup& g) {
  json j = {{"record", "group"}, {"group_id", g.group_id}, {"member_ids", g.member_ids}};
  j["gold_variation_keys"] = g.gold_variation_keys ? json(*g.gold_variation_keys) : json(nullptr);
  return j;
}

void write_catalog(const CatalogStore& store, std::ostream& out,
                   const std::optional<json>& meta) {
  if (meta) {
    json m = *meta;
    m["record"] = "meta";
    out << m.dump() << '\n';
  }
  for (const auto& [id, p] : store.products()) out << to_json(p).dump() << '\n';
  for (const auto& [id, g] : store.groups()) out << to_json(g).dump() << '\n';
}

void write_catalog(const CatalogStore& store, const std::filesystem::path& path,
                   const std::optional<json>& meta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write catalog file '" + path.string() + "'");
  write_catalog(store, out, meta);
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace varm::catalog
