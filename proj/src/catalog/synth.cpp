#include "varm/catalog/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "varm/common/errors.hpp"
#include "varm/common/rng.hpp"
#include "varm/common/text.hpp"

namespace varm::catalog {
namespace {

using Vocabulary = std::vector<std::string>;

const Vocabulary kProductTypes = {
    "Keyboard", "Dress", "Ring", "Headphones", "Backpack", "Sneakers", "Watch", "Mug",
    "Sofa", "Lamp", "Jacket", "Tent", "Blender", "Monitor", "Sunglasses", "Wallet",
    "Drill", "Pillow", "Racket", "Tea"};

const Vocabulary kBrands = {
    "Acme", "Globex", "Initech", "Umbrella", "Hooli", "Vandelay", "Stark", "Wayne",
    "Tyrell", "Cyberdyne", "Soylent", "Wonka", "Gringotts", "Oscorp", "Monarch", "Aperture",
    "Blackmesa", "Duff", "Krusty", "Nakatomi", "Oceanic", "Prestige", "Sirius", "Virtucon",
    "Zorg", "Atlas", "Borealis", "Cobalt", "Dynamo", "Ember", "Fjord", "Granite",
    "Harbor", "Ionic", "Juniper", "Kestrel", "Lumen", "Meridian", "Nimbus", "Orion",
    "Pinnacle", "Quartz", "Redwood", "Summit", "Tundra", "Ultra", "Vertex", "Willow"};

const Vocabulary kModelNames = {
    "Aurora", "Blaze", "Comet", "Delta", "Echo", "Falcon", "Glacier", "Horizon",
    "Impulse", "Jet", "Krypton", "Legend", "Mirage", "Nova", "Onyx", "Phantom",
    "Quest", "Raven", "Sierra", "Titan", "Unity", "Vortex", "Wave", "Zenith"};

const std::map<std::string, Vocabulary, std::less<>> kValueVocabularies = {
    {"color", {"red", "blue", "green", "black", "white", "yellow", "orange", "purple",
               "pink", "brown", "gray", "navy", "teal", "maroon", "olive", "beige",
               "silver", "gold", "ivory", "coral", "lavender", "mint", "charcoal", "turquoise"}},
    {"size", {"xxs", "xs", "s", "m", "l", "xl", "xxl", "3xl", "4", "5", "6", "7",
              "8", "9", "10", "11", "12", "13", "14", "15"}},
    {"material", {"cotton", "linen", "wool", "silk", "leather", "steel", "aluminum",
                  "plastic", "oak", "glass", "ceramic", "bamboo", "nylon", "polyester"}},
    {"style", {"classic", "modern", "vintage", "sport", "casual", "formal", "minimal",
               "rustic", "retro", "urban", "boho", "industrial"}},
    {"flavor", {"vanilla", "chocolate", "strawberry", "mint", "lemon", "peach", "mango",
                "caramel", "coffee", "cherry", "honey", "ginger"}},
    {"pattern", {"solid", "striped", "plaid", "floral", "dotted", "checked", "paisley",
                 "camo", "geometric", "herringbone"}},
    {"capacity", {"250 ml", "330 ml", "500 ml", "750 ml", "1 l", "1.5 l", "2 l", "3 l"}},
    {"length", {"mini", "midi", "maxi", "knee", "ankle", "cropped"}},
    {"metal", {"yellow gold", "white gold", "rose gold", "platinum", "sterling silver",
               "titanium"}},
    {"keyboard_switch", {"linear optical", "clicky optical", "red", "blue", "brown",
                         "silent red", "speed silver"}},
    {"keyboard_layout", {"us", "uk", "de", "fr", "jp", "nordic"}},
    {"item_package_quantity", {"1", "2", "3", "4", "6", "8", "10", "12", "24"}},
};

// Keys without a dedicated list draw from this one.
const Vocabulary kGenericValues = {
    "alpha", "bravo", "charlie", "delta", "echo", "foxtrot", "golf", "hotel", "india",
    "juliett", "kilo", "lima", "mike", "november", "oscar", "papa", "quebec", "romeo",
    "sierra", "tango", "uniform", "victor", "whiskey", "xray", "yankee", "zulu"};

const Vocabulary& vocabulary_for(const std::string& key) {
  auto it = kValueVocabularies.find(key);
  return it == kValueVocabularies.end() ? kGenericValues : it->second;
}

std::string padded(char prefix, std::size_t n, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%c%0*zu", prefix, width, n);
  return buf;
}

// k distinct values from vocab, in draw order.
std::vector<std::string> draw_distinct(const Vocabulary& vocab, std::size_t k, Rng& rng) {
  std::vector<std::size_t> idx(vocab.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  rng.shuffle(std::span<std::size_t>(idx));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(vocab[idx[i]]);
  return out;
}

}  // namespace

void validate(const SynthSpec& spec) {
  std::vector<std::string> bad;
  if (spec.n_types < 1) bad.push_back("n_types: must be >= 1");
  if (spec.brands_per_type < 1) bad.push_back("brands_per_type: must be >= 1");
  if (spec.groups_per_brand < 1) bad.push_back("groups_per_brand: must be >= 1");
  if (spec.group_size_min < 1) bad.push_back("group_size_range: min must be >= 1");
  if (spec.group_size_max < spec.group_size_min) {
    bad.push_back("group_size_range: max must be >= min");
  }
  if (spec.variation_keys_per_group < 1) bad.push_back("variation_keys_per_group: must be >= 1");
  if (spec.variation_keys.size() < static_cast<std::size_t>(std::max(spec.variation_keys_per_group, 0))) {
    bad.push_back("variation_keys: fewer candidates than variation_keys_per_group");
  }
  if (spec.common_keys.empty()) bad.push_back("common_keys: must name at least one key");

  std::set<std::string> seen;
  const std::set<std::string> reserved = {"brand", "product_type", "title"};
  auto check_key = [&](const std::string& raw, const char* field) {
    std::string k = normalize_key(raw);
    if (k.empty()) bad.push_back(std::string(field) + ": empty key");
    else if (reserved.contains(k)) bad.push_back(std::string(field) + ": '" + k + "' is reserved");
    else if (!seen.insert(k).second) bad.push_back(std::string(field) + ": duplicate key '" + k + "'");
  };
  for (const auto& k : spec.variation_keys) check_key(k, "variation_keys");
  for (const auto& k : spec.common_keys) check_key(k, "common_keys");
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

CatalogStore synth_catalog(const SynthSpec& spec, std::uint64_t seed) {
  validate(spec);

  std::vector<std::string> bad;
  if (static_cast<std::size_t>(spec.n_types) > kProductTypes.size()) {
    bad.push_back("n_types: vocabulary has only " + std::to_string(kProductTypes.size()) +
                  " product types");
  }
  auto brands_needed = static_cast<std::size_t>(spec.n_types) * spec.brands_per_type;
  if (brands_needed > kBrands.size()) {
    bad.push_back("brands_per_type: n_types * brands_per_type exceeds the " +
                  std::to_string(kBrands.size()) + "-brand vocabulary");
  }
  for (const auto& raw : spec.variation_keys) {
    auto k = normalize_key(raw);
    if (vocabulary_for(k).size() < static_cast<std::size_t>(spec.group_size_max)) {
      bad.push_back("group_size_range: '" + k + "' has only " +
                    std::to_string(vocabulary_for(k).size()) +
                    " distinct values, fewer than the maximum group size");
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  std::vector<std::string> variation_keys, common_keys;
  for (const auto& k : spec.variation_keys) variation_keys.push_back(normalize_key(k));
  for (const auto& k : spec.common_keys) common_keys.push_back(normalize_key(k));

  Rng rng = Rng::derive(seed, "synth_catalog");
  CatalogBuilder builder;
  std::size_t next_product = 0, next_group = 0;

  for (int t = 0; t < spec.n_types; ++t) {
    const std::string& type = kProductTypes[t];
    for (int b = 0; b < spec.brands_per_type; ++b) {
      const std::string& brand = kBrands[static_cast<std::size_t>(t) * spec.brands_per_type + b];
      for (int gi = 0; gi < spec.groups_per_brand; ++gi) {
        auto size = static_cast<std::size_t>(rng.between(spec.group_size_min, spec.group_size_max));
        std::string title = brand + " " + kModelNames[rng.below(kModelNames.size())] + " " + type;

        std::vector<std::pair<std::string, std::string>> shared;
        for (const auto& k : common_keys) {
          const auto& vocab = vocabulary_for(k);
          shared.emplace_back(k, vocab[rng.below(vocab.size())]);
        }

        std::vector<std::string> pool = variation_keys;
        rng.shuffle(std::span<std::string>(pool));
        pool.resize(spec.variation_keys_per_group);
        // Planted keys keep the order the caller listed them in.
        std::vector<std::string> planted;
        for (const auto& k : variation_keys) {
          if (std::find(pool.begin(), pool.end(), k) != pool.end()) planted.push_back(k);
        }
        std::vector<std::vector<std::string>> values;
        for (const auto& k : planted) values.push_back(draw_distinct(vocabulary_for(k), size, rng));

        VariationGroup group;
        group.group_id = padded('g', next_group++, 6);
        group.gold_variation_keys = planted;
        for (std::size_t m = 0; m < size; ++m) {
          std::vector<Attribute> attrs;
          attrs.push_back({"title", title});
          for (const auto& [k, v] : shared) attrs.push_back({k, v});
          for (std::size_t v = 0; v < planted.size(); ++v) attrs.push_back({planted[v], values[v][m]});
          std::string id = padded('p', next_product++, 7);
          builder.add_product(make_product(id, std::move(attrs), brand, type));
          group.member_ids.push_back(id);
        }
        builder.add_group(std::move(group));
      }
    }
  }
  return std::move(builder).build();
}

nlohmann::json to_json(const SynthSpec& s) {
  return {{"n_types", s.n_types},
          {"brands_per_type", s.brands_per_type},
          {"groups_per_brand", s.groups_per_brand},
          {"group_size_range", {s.group_size_min, s.group_size_max}},
          {"variation_keys", s.variation_keys},
          {"variation_keys_per_group", s.variation_keys_per_group},
          {"common_keys", s.common_keys}};
}

SynthSpec synth_spec_from_json(const nlohmann::json& j) {
  SynthSpec s;
  s.n_types = j.value("n_types", s.n_types);
  s.brands_per_type = j.value("brands_per_type", s.brands_per_type);
  s.groups_per_brand = j.value("groups_per_brand", s.groups_per_brand);
  if (j.contains("group_size_range")) {
    const auto& r = j.at("group_size_range");
    s.group_size_min = r.at(0).get<int>();
    s.group_size_max = r.at(1).get<int>();
  }
  s.variation_keys = j.value("variation_keys", s.variation_keys);
  s.variation_keys_per_group = j.value("variation_keys_per_group", s.variation_keys_per_group);
  s.common_keys = j.value("common_keys", s.common_keys);
  return s;
}

}  // namespace varm::catalog
