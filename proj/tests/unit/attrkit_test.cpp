#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "varm/attrkit/heuristic.hpp"
#include "varm/attrkit/identify.hpp"
#include "varm/attrkit/prompt.hpp"
#include "varm/attrkit/response.hpp"
#include "varm/attrkit/retrieval.hpp"
#include "varm/catalog/store.hpp"
#include "varm/common/errors.hpp"

namespace varm::attrs {
namespace {

using catalog::make_product;
using catalog::Product;

std::vector<const Product*> ptrs(const std::vector<Product>& v) {
  std::vector<const Product*> out;
  for (const auto& p : v) out.push_back(&p);
  return out;
}

TEST(Heuristic, ThreeColorsVaryBrandShared) {
  std::vector<Product> g = {make_product("a", {{"color", "red"}, {"brand", "acme"}}),
                            make_product("b", {{"color", "blue"}, {"brand", "acme"}}),
                            make_product("c", {{"color", "green"}, {"brand", "acme"}})};
  auto labels = heuristic_labels(std::span<const Product>(g));
  EXPECT_EQ(labels.at("color"), AttrLabel::kVariation);
  EXPECT_EQ(labels.at("brand"), AttrLabel::kCommon);
}

TEST(Heuristic, NineOfTenIsNotAboveThreshold) {
  std::vector<Product> g;
  for (int i = 0; i < 10; ++i) {
    g.push_back(make_product("p" + std::to_string(i),
                             {{"shade", "s" + std::to_string(std::min(i, 8))}, {"code", "c" + std::to_string(i)}}));
  }
  auto labels = heuristic_labels(std::span<const Product>(g));
  EXPECT_EQ(labels.at("shade"), AttrLabel::kCommon);
  EXPECT_EQ(labels.at("code"), AttrLabel::kVariation);
}

TEST(Heuristic, AbsenceIsOneMoreValue) {
  std::vector<Product> g = {make_product("a", {{"size", "s"}, {"fit", "x"}}),
                            make_product("b", {{"size", "m"}, {"fit", "x"}}),
                            make_product("c", {})};
  auto labels = heuristic_labels(std::span<const Product>(g));
  EXPECT_EQ(labels.at("size"), AttrLabel::kVariation);
  EXPECT_EQ(labels.at("fit"), AttrLabel::kCommon);
  EXPECT_EQ(labels.size(), 2u);
}

TEST(Heuristic, ValuesCompareNormalized) {
  std::vector<Product> g = {make_product("a", {{"color", "Red "}}), make_product("b", {{"color", "red"}})};
  EXPECT_EQ(heuristic_labels(std::span<const Product>(g)).at("color"), AttrLabel::kCommon);
}

TEST(Heuristic, NeedsTwoProducts) {
  std::vector<Product> one = {make_product("a", {{"k", "v"}})};
  EXPECT_THROW(heuristic_labels(std::span<const Product>(one)), InputError);
}

TEST(Retrieval, ListingKeyboards) {
  auto store = testing::listings_store();
  auto ctx = retrieve_variation_context(store, "Keyboard", "Razer");
  EXPECT_EQ(ctx.brand_variation_attrs,
            (std::vector<std::string>{"color/design", "keyboard_layout", "keyboard_switch"}));
  EXPECT_EQ(ctx.type_variation_attrs,
            (std::vector<std::string>{"color/design", "keyboard_layout", "keyboard_switch", "model", "switch"}));
  auto hx = retrieve_variation_context(store, "Keyboard", "HyperX");
  EXPECT_EQ(hx.brand_variation_attrs, (std::vector<std::string>{"model", "switch"}));
}

TEST(Retrieval, ListingDressesAndRings) {
  auto store = testing::listings_store();
  EXPECT_EQ(retrieve_variation_context(store, "Dress", "Zara").type_variation_attrs,
            (std::vector<std::string>{"color", "length", "size"}));
  EXPECT_EQ(retrieve_variation_context(store, "Ring", "Cartier").type_variation_attrs,
            (std::vector<std::string>{"color", "metal", "size"}));
}

TEST(Retrieval, UnknownTypeAndSelfExclusion) {
  auto store = testing::listings_store();
  auto none = retrieve_variation_context(store, "Toaster", "Nobody");
  EXPECT_TRUE(none.type_variation_attrs.empty());
  EXPECT_TRUE(none.brand_variation_attrs.empty());
  EXPECT_EQ(none.product_type, "Toaster");
  std::vector<std::string> self = {"t5-razer"};
  auto ctx = retrieve_variation_context(store, "Keyboard", "Razer", self);
  EXPECT_TRUE(ctx.brand_variation_attrs.empty());
  EXPECT_EQ(ctx.type_variation_attrs, (std::vector<std::string>{"model", "switch"}));
}

TEST(Retrieval, HeuristicFallbackWithoutGold) {
  catalog::CatalogBuilder b;
  b.add_product(make_product("a", {{"color", "red"}}, "Acme", "Mug"));
  b.add_product(make_product("b", {{"color", "blue"}}, "Acme", "Mug"));
  b.add_group({"g", {"a", "b"}, std::nullopt});
  auto store = std::move(b).build();
  EXPECT_EQ(group_variation_keys(store, *store.find_group("g")), (std::vector<std::string>{"color"}));
  EXPECT_EQ(retrieve_variation_context(store, "Mug", "Acme").type_variation_attrs,
            (std::vector<std::string>{"color"}));
}

TEST(AttrPrompt, GoldenWithoutContext) {
  auto products = testing::golden_products();
  auto group = ptrs(products);
  EXPECT_EQ(build_attr_prompt(group), testing::read_file(testing::data_path("golden/attr_prompt_norag.txt")));
}

TEST(AttrPrompt, GoldenWithContext) {
  auto products = testing::golden_products();
  auto group = ptrs(products);
  RagContext ctx{"Shoe", "Acme", {"color", "size", "width"}, {"color", "size"}};
  auto prompt = build_attr_prompt(group, ctx);
  EXPECT_EQ(prompt, testing::read_file(testing::data_path("golden/attr_prompt_rag.txt")));
  EXPECT_NE(prompt.find("Usual different attributes for Shoe products are color, size, width."),
            std::string::npos);
}

TEST(AttrPrompt, NeedsTwoProducts) {
  auto products = testing::golden_products();
  std::vector<const Product*> one = {&products[0]};
  EXPECT_THROW(build_attr_prompt(one), InputError);
}

TEST(AttrResponse, FirstExampleExact) {
  auto p = parse_attr_response(testing::read_file(testing::data_path("fixtures/attr_reply_1.txt")));
  EXPECT_EQ(p.different, (std::vector<std::string>{"item_name", "item_id", "item_package_weight", "color",
                                                   "included_components", "model_name", "size", "grip_size",
                                                   "head_size"}));
  EXPECT_EQ(p.same, (std::vector<std::string>{"brand", "product_type", "item_type"}));
  EXPECT_EQ(p.reason.size(), 1u);
  EXPECT_TRUE(p.contradictions.empty());
  EXPECT_FALSE(p.extra_text);
  auto r = reconcile_labels(p);
  EXPECT_EQ(r.penalty_count, 0u);
  EXPECT_EQ(r.labels.size(), 12u);
  EXPECT_EQ(r.labels.at("grip_size"), AttrLabel::kVariation);
  EXPECT_EQ(r.labels.at("item_type"), AttrLabel::kCommon);
}

TEST(AttrResponse, SecondExampleExact) {
  auto p = parse_attr_response(testing::read_file(testing::data_path("fixtures/attr_reply_2.txt")));
  EXPECT_EQ(p.different,
            (std::vector<std::string>{"color", "size", "item_name", "item_id", "part_number", "generic_keyword"}));
  EXPECT_EQ(p.same, (std::vector<std::string>{"age_range_description", "brand_value", "closure_type",
                                              "material_composition", "item_type_keyword", "product_type",
                                              "care_instructions"}));
  EXPECT_EQ(reconcile_labels(p).penalty_count, 0u);
}

TEST(AttrResponse, ContradictionCostsOnePenalty) {
  auto p = parse_attr_response(R"({"Different": ["Color", "size"], "Same": ["color", "brand"]})");
  EXPECT_EQ(p.contradictions, (std::vector<std::string>{"color"}));
  auto r = reconcile_labels(p);
  EXPECT_EQ(r.penalty_count, 1u);
  EXPECT_EQ(r.labels.at("color"), AttrLabel::kVariation);
  EXPECT_EQ(r.labels.at("brand"), AttrLabel::kCommon);
}

TEST(AttrResponse, ProsePrefixAndDuplicates) {
  auto p = parse_attr_response("Sure! Here it is:\n{\"Different\": [\"size\", \"Size\"], \"Same\": []}\nThanks");
  EXPECT_TRUE(p.extra_text);
  EXPECT_EQ(p.different, (std::vector<std::string>{"size"}));
  EXPECT_TRUE(p.reason.empty());
}

TEST(AttrResponse, BracesInsideStrings) {
  auto j = extract_first_json_object(R"(note {"a": "}{", "b": 1} tail)");
  ASSERT_TRUE(j);
  EXPECT_EQ((*j)["a"], "}{");
}

TEST(AttrResponse, Errors) {
  EXPECT_THROW(parse_attr_response("no json here"), ParseError);
  EXPECT_THROW(parse_attr_response(R"({"Different": ["a"]})"), ParseError);
  EXPECT_THROW(parse_attr_response(R"({"Different": "a", "Same": []})"), ParseError);
  EXPECT_THROW(parse_attr_response(R"({"Different": [1], "Same": []})"), ParseError);
  try {
    parse_attr_response("{broken");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.raw(), "{broken");
  }
}

class ScriptedClient : public match::CompletionClient {
 public:
  std::string complete(const std::string& prompt, const match::GenerationParams& params) override {
    last_prompt = prompt;
    last_params = params;
    if (prompt.find("Broken") != std::string::npos) return "nothing useful";
    return R"({"Different": ["color", "size"], "Same": ["brand", "color"], "Reason": ["x"]})";
  }
  std::string last_prompt;
  match::GenerationParams last_params;
};

catalog::CatalogStore shoe_store() {
  catalog::CatalogBuilder b;
  auto products = testing::golden_products();
  for (auto& p : products) b.add_product(p);
  b.add_product(make_product("s-1", {{"title", "Sock"}, {"width", "w"}}, "Acme", "Shoe"));
  b.add_product(make_product("s-2", {{"title", "Sock"}, {"width", "n"}}, "Acme", "Shoe"));
  b.add_product(make_product("x-1", {{"title", "Broken"}}, "Zed", "Hat"));
  b.add_product(make_product("x-2", {{"title", "Broken"}}, "Zed", "Hat"));
  b.add_group({"shoes", {"gold-1", "gold-2", "gold-3"}, std::vector<std::string>{"color", "size"}});
  b.add_group({"socks", {"s-1", "s-2"}, std::vector<std::string>{"width"}});
  b.add_group({"hats", {"x-1", "x-2"}, std::nullopt});
  return std::move(b).build();
}

TEST(Identify, RagAddsContextAndReconciles) {
  auto store = shoe_store();
  ScriptedClient client;
  const auto& g = *store.find_group("shoes");
  std::vector<const Product*> group;
  for (const auto& id : g.member_ids) group.push_back(&store.product(id));
  auto result = identify_attributes(client, group, true, store);
  EXPECT_EQ(result.penalty_count, 1u);
  EXPECT_EQ(result.labels.at("size"), AttrLabel::kVariation);
  EXPECT_NE(client.last_prompt.find("Usual different attributes for Shoe products are width."), std::string::npos);
  EXPECT_EQ(client.last_params, match::attr_generation_defaults());
  EXPECT_EQ(result.prompt, client.last_prompt);
  identify_attributes(client, group, false, store);
  EXPECT_EQ(client.last_prompt.find("Usual different"), std::string::npos);
}

TEST(Identify, GroupFailuresAreIsolated) {
  auto store = shoe_store();
  ScriptedClient client;
  std::vector<std::string> ids = {"hats", "shoes"};
  auto outcomes = identify_groups(client, store, ids, false, match::attr_generation_defaults(), 1);
  ASSERT_EQ(outcomes.size(), 2u);
  EXPECT_FALSE(outcomes[0].result);
  EXPECT_NE(outcomes[0].error.find("nothing useful"), std::string::npos);
  ASSERT_TRUE(outcomes[1].result);
  auto line = report_line(outcomes[1], "generative");
  EXPECT_EQ(line["group_id"], "shoes");
  EXPECT_EQ(line["labels"]["color"], "variation");
  EXPECT_EQ(line["penalty_count"], 1);
  EXPECT_TRUE(report_line(outcomes[0], "generative").contains("error"));
}

}  // namespace
}  // namespace varm::attrs
