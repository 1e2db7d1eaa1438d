#pragma once

#include <string_view>

#include "varm/matchkit/score.hpp"

namespace varm::match {

// Reads a yes/no reply. The first word (case-insensitive, after whitespace
// and quoting characters) decides the label; the first decimal literal in
// [0, 1] after it is the similarity. Without one, similarity is 1.0 for yes
// and 0.0 for no, and default_used is set. Throws ParseError carrying the
// raw text when the reply starts with neither word.
MatchVerdict parse_match_response(std::string_view text);

}  // namespace varm::match
