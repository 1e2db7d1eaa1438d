#include "varm/matchkit/response.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "varm/common/errors.hpp"

namespace varm::match {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// Characters models wrap a bare answer in: quotes, emphasis, brackets.
bool is_wrapper(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '\'' || c == '*' ||
         c == '`' || c == '(' || c == '[' || c == '_';
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Next decimal literal at or after pos: digits with optional fraction, or a
// leading-dot fraction. Returns false when none remain.
bool next_number(std::string_view text, std::size_t& pos, double& value) {
  while (pos < text.size()) {
    std::size_t start = pos;
    bool leading_dot = text[pos] == '.' && pos + 1 < text.size() && is_digit(text[pos + 1]);
    if (!is_digit(text[pos]) && !leading_dot) {
      ++pos;
      continue;
    }
    // Skip digits glued to letters (e.g. "v2", "3d").
    bool glued = start > 0 && is_alpha(text[start - 1]);
    std::size_t end = start;
    while (end < text.size() && is_digit(text[end])) ++end;
    if (end < text.size() && text[end] == '.' && end + 1 < text.size() && is_digit(text[end + 1])) {
      ++end;
      while (end < text.size() && is_digit(text[end])) ++end;
    }
    pos = end;
    if (glued) continue;
    std::string literal(text.substr(start, end - start));
    if (literal.front() == '.') literal.insert(literal.begin(), '0');
    auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
    if (ec == std::errc()) return true;
  }
  return false;
}

}  // namespace

MatchVerdict parse_match_response(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && is_wrapper(text[i])) ++i;
  std::size_t j = i;
  while (j < text.size() && is_alpha(text[j])) ++j;
  std::string word = lower(text.substr(i, j - i));

  MatchVerdict v;
  if (word == "yes") {
    v.label = PairLabel::kVariantMatch;
  } else if (word == "no") {
    v.label = PairLabel::kMismatch;
  } else {
    throw ParseError("match reply does not start with yes or no", std::string(text));
  }

  std::size_t pos = j;
  double value = 0;
  while (next_number(text, pos, value)) {
    if (value >= 0.0 && value <= 1.0) {
      v.similarity = value;
      return v;
    }
  }
  v.similarity = v.label == PairLabel::kVariantMatch ? 1.0 : 0.0;
  v.default_used = true;
  return v;
}

}  // namespace varm::match
