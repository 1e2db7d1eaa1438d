#include "varm/attrkit/prompt.hpp"

#include "varm/common/errors.hpp"
#include "varm/common/prompt_assets.hpp"
#include "varm/common/template.hpp"
#include "varm/common/text.hpp"
#include "varm/matchkit/prompt.hpp"

namespace varm::attrs {

std::string build_attr_prompt(std::span<const catalog::Product* const> group,
                              const std::optional<RagContext>& context) {
  if (group.size() < 2) {
    throw InputError("an attribute prompt needs at least 2 products, got " +
                     std::to_string(group.size()));
  }
  std::vector<std::string> blocks;
  blocks.reserve(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    blocks.push_back(match::render_product_block(*group[i], i + 1));
  }

  std::string rag;
  if (context) {
    rag = render_template(assets::kAttrRagContextV1,
                          {{"product_type", context->product_type},
                           {"brand", context->brand},
                           {"product_type_variation_attributes", join(context->type_variation_attrs, ", ")},
                           {"brand_variation_attributes", join(context->brand_variation_attrs, ", ")}});
    rag += "\n\n";
  }
  return render_template(assets::kAttrPromptV1,
                         {{"rag_context", rag}, {"variation_group_products", join(blocks, "\n")}});
}

}  // namespace varm::attrs
