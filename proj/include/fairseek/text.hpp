#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fairseek {

std::string trim(std::string_view s);
std::string lower_ascii(std::string_view s);

/// Collapses every run of whitespace to a single space and trims the ends.
/// This is the normalization applied to both sides of evidence-quote checks.
std::string collapse_whitespace(std::string_view s);

/// Splits into lowercase tokens on ASCII non-alphanumerics. Bytes >= 0x80
/// (multi-byte UTF-8 sequences) are kept inside tokens, so non-Latin words
/// survive as single tokens. No stemming.
std::vector<std::string> tokenize(std::string_view s);

/// tokenize() minus English function words and data-seeking filler
/// ("data", "dataset", ...). Used by the semantic query planner and the
/// relevance heuristic.
std::vector<std::string> content_tokens(std::string_view s);

bool is_stopword(std::string_view token);

std::vector<std::string> split(std::string_view s, char sep);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

/// Case-insensitive substring search (ASCII case folding).
bool icontains(std::string_view haystack, std::string_view needle);

}  // namespace fairseek
