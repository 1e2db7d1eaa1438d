#include "varm/matchkit/prompt.hpp"

#include "varm/common/prompt_assets.hpp"
#include "varm/common/template.hpp"

namespace varm::match {

std::string render_product_block(const catalog::Product& product, std::size_t index) {
  const std::string n = std::to_string(index);
  std::string out = "<product " + n + ">\n";
  for (const auto& a : product.attributes) out += a.key + " = " + a.value + ",\n";
  out += "</product " + n + ">";
  return out;
}

std::string build_match_prompt(const catalog::Product& left, const catalog::Product& right) {
  return render_template(assets::kMatchPromptV1, {{"product 1", render_product_block(left, 1)},
                                                  {"product 2", render_product_block(right, 2)}});
}

}  // namespace varm::match
