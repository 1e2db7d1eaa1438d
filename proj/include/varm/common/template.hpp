#pragma once

#include <map>
#include <string>
#include <string_view>

namespace varm {

// Substitutes "{name}" for every name present in `values`. Braces that do not
// enclose a known name are copied through untouched, so templates may carry
// literal JSON. Substituted text is never rescanned.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string, std::less<>>& values);

}  // namespace varm
