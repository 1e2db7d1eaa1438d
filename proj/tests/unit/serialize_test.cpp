#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "varm/catalog/synth.hpp"
#include "varm/common/errors.hpp"
#include "varm/pairforge/export.hpp"
#include "varm/pairforge/positives.hpp"
#include "varm/pairforge/serialize.hpp"
#include "varm/pairforge/split.hpp"
#include "varm/pairforge/tokenizer.hpp"

namespace varm::pairforge {
namespace {

// n content tokens under BasicTokenizer: one "k: w w w" attribute yields
// k, :, then the words.
catalog::Product with_tokens(const std::string& id, std::size_t n) {
  std::string words;
  for (std::size_t i = 2; i < n; ++i) words += (words.empty() ? "w" : " w") + std::to_string(i);
  return catalog::make_product(id, {{"k", words}});
}

std::size_t count(const SerializedPair& s, const char* token) {
  return static_cast<std::size_t>(std::count(s.tokens.begin(), s.tokens.end(), token));
}

TEST(Tokenizer, SplitsPunctuationAndLowercases) {
  BasicTokenizer t;
  EXPECT_EQ(t.tokenize("Color: Dark-BLUE  (x2)"),
            (std::vector<std::string>{"color", ":", "dark", "-", "blue", "(", "x2", ")"}));
  EXPECT_EQ(t.tokenize("[SEP]"), (std::vector<std::string>{"[", "sep", "]"}));
  EXPECT_TRUE(t.tokenize("   ").empty());
  EXPECT_EQ(t.id(), "basic-v1");
}

TEST(Serialize, FragmentsAndText) {
  auto p = catalog::make_product("x", {{"Color", "Red"}, {"Size", "M"}});
  EXPECT_EQ(attribute_fragments(p), (std::vector<std::string>{"color: Red", "size: M"}));
  EXPECT_EQ(product_text(p), "color: Red; size: M");
}

TEST(Serialize, TenAndTenTokensLeave489Pads) {
  BasicTokenizer t;
  auto a = with_tokens("a", 10), b = with_tokens("b", 10);
  ASSERT_EQ(product_tokens(a, t).size(), 10u);
  auto s = serialize_pair(a, b, t);
  EXPECT_EQ(s.tokens.size(), 512u);
  EXPECT_EQ(count(s, kPadToken), 489u);
  EXPECT_EQ(s.left_token_count, 10u);
  EXPECT_FALSE(s.truncated_left);
  EXPECT_EQ(s.tokens[0], kBosToken);
  EXPECT_EQ(s.tokens[11], kSepToken);
  EXPECT_EQ(s.tokens[22], kSepToken);
}

TEST(Serialize, LongSideTruncatedAt254) {
  BasicTokenizer t;
  EXPECT_EQ(per_side_cap(512), 254u);
  auto s = serialize_pair(with_tokens("a", 300), with_tokens("b", 5), t);
  EXPECT_EQ(s.left_token_count, 254u);
  EXPECT_TRUE(s.truncated_left);
  EXPECT_FALSE(s.truncated_right);
  EXPECT_EQ(s.tokens.size(), 512u);
  EXPECT_EQ(count(s, kPadToken), 512u - 3 - 254 - 5);
}

TEST(Serialize, NoReallocationFromShortSide) {
  BasicTokenizer t;
  auto s = serialize_pair(with_tokens("a", 400), with_tokens("b", 2), t, 64);
  EXPECT_EQ(s.left_token_count, per_side_cap(64));
  EXPECT_EQ(count(s, kPadToken), 64u - 3 - per_side_cap(64) - 2);
}

TEST(Serialize, SwappingSidesSwapsSegments) {
  BasicTokenizer t;
  auto a = with_tokens("a", 7), b = with_tokens("b", 12);
  auto ab = serialize_pair(a, b, t), ba = serialize_pair(b, a, t);
  std::vector<std::string> a_seg(ab.tokens.begin() + 1, ab.tokens.begin() + 8);
  std::vector<std::string> b_seg(ab.tokens.begin() + 9, ab.tokens.begin() + 21);
  std::vector<std::string> b_seg2(ba.tokens.begin() + 1, ba.tokens.begin() + 13);
  std::vector<std::string> a_seg2(ba.tokens.begin() + 14, ba.tokens.begin() + 21);
  EXPECT_EQ(a_seg, a_seg2);
  EXPECT_EQ(b_seg, b_seg2);
  EXPECT_EQ(ab.left_token_count, ba.right_token_count);
}

TEST(Serialize, BudgetBelowEightRejected) {
  BasicTokenizer t;
  auto a = with_tokens("a", 3);
  EXPECT_THROW(serialize_pair(a, a, t, 7), InputError);
  auto s = serialize_pair(a, a, t, 8);
  EXPECT_EQ(s.tokens.size(), 8u);
  EXPECT_EQ(s.left_token_count, 2u);
}

DatasetSplit small_split(const catalog::CatalogStore& store) {
  auto pos = extract_positive_pairs(store);
  return split_dataset(store, pos, 0.5, 1);
}

TEST(Export, EmptySplitWritesOnlyMetadata) {
  catalog::CatalogStore store;
  DatasetSplit empty;
  std::ostringstream out;
  BasicTokenizer t;
  export_pairs(store, empty, t, 512, out);
  std::istringstream in(out.str());
  auto file = read_pairs(in);
  EXPECT_TRUE(file.records.empty());
  EXPECT_EQ(file.budget, 512u);
  EXPECT_EQ(file.tokenizer_id, "basic-v1");
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
}

TEST(Export, RoundTripFieldByField) {
  catalog::SynthSpec spec;
  spec.groups_per_brand = 2;
  auto store = catalog::synth_catalog(spec, 4);
  auto split = small_split(store);
  BasicTokenizer t;
  std::ostringstream out;
  export_pairs(store, split, t, 128, out, {{"config_digest", "abc"}});
  std::istringstream in(out.str());
  auto file = read_pairs(in);
  EXPECT_EQ(file.meta.at("config_digest"), "abc");
  EXPECT_EQ(file.seed, 1u);
  ASSERT_EQ(file.records.size(), split.train.size() + split.eval.size());
  std::size_t i = 0;
  for (const auto* side : {&split.train, &split.eval}) {
    for (const auto& p : *side) {
      const auto& r = file.records[i++];
      EXPECT_EQ(r.pair, p);
      EXPECT_EQ(r.split, side == &split.train ? "train" : "eval");
      EXPECT_EQ(r.serialized, serialize_pair(store.product(p.left_id), store.product(p.right_id), t, 128));
      EXPECT_EQ(r.left_text, product_text(store.product(p.left_id)));
    }
  }
}

TEST(Export, FourPairsPreserveLabels) {
  auto store = catalog::synth_catalog({}, 3);
  DatasetSplit split;
  auto pos = extract_positive_pairs(store);
  split.train = {pos[0], pos[1]};
  split.eval = {pos[2], make_negative(pos[0].left_id, pos[2].right_id, Bucket::kEasy)};
  BasicTokenizer t;
  std::ostringstream out;
  export_pairs(store, split, t, 64, out);
  std::istringstream in(out.str());
  auto file = read_pairs(in);
  ASSERT_EQ(file.records.size(), 4u);
  EXPECT_EQ(file.records[3].pair.label, PairLabel::kMismatch);
  EXPECT_EQ(file.records[3].pair.bucket, Bucket::kEasy);
  EXPECT_EQ(file.records[0].pair.label, PairLabel::kVariantMatch);
}

TEST(Export, UnwritablePathIsError) {
  DatasetSplit empty;
  BasicTokenizer t;
  EXPECT_THROW(export_pairs({}, empty, t, 512, std::filesystem::path("/nonexistent/dir/pairs.jsonl")),
               InputError);
}

TEST(Export, RejectsTamperedTokenCount) {
  auto store = catalog::synth_catalog({}, 3);
  auto split = small_split(store);
  BasicTokenizer t;
  std::ostringstream out;
  export_pairs(store, split, t, 64, out);
  std::istringstream in(out.str());
  std::string meta, first;
  std::getline(in, meta);
  std::getline(in, first);
  auto j = nlohmann::json::parse(first);
  j["tokens"].erase(0);
  EXPECT_THROW(pair_record_from_json(j, 64), InputError);
}

}  // namespace
}  // namespace varm::pairforge
