#include "varm/pairforge/positives.hpp"

#include <algorithm>

namespace varm::pairforge {

std::vector<LabeledPair> extract_positive_pairs(const catalog::CatalogStore& store) {
  std::vector<LabeledPair> out;
  for (const auto& [gid, group] : store.groups()) {
    std::vector<std::string> ids = group.member_ids;
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        out.push_back(make_positive(ids[i], ids[j], gid));
      }
    }
  }
  return out;
}

}  // namespace varm::pairforge
