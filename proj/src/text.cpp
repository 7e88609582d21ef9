#include "fairseek/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace fairseek {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

bool is_token_char(unsigned char c) {
    return std::isalnum(c) != 0 || c >= 0x80;
}

const std::unordered_set<std::string>& stopword_set() {
    // Function words plus data-seeking filler. The filler terms are the ones
    // a keyword index already implies, so the semantic planner drops them.
    static const std::unordered_set<std::string> words = {
        "a",    "an",    "the",  "and",  "or",   "of",    "in",    "on",
        "for",  "to",    "with", "about","from", "by",    "at",    "as",
        "is",   "are",   "be",   "was",  "were", "this",  "that",  "these",
        "those","i",     "we",   "you",  "they", "it",    "me",    "my",
        "our",  "your",  "their","find", "show", "need",  "want",  "give",
        "get",  "please","what", "which","where","how",   "do",    "does",
        "data", "dataset", "datasets", "info", "information",
    };
    return words;
}

}  // namespace

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = true;  // leading whitespace dropped
    for (unsigned char c : s) {
        if (is_space(c)) {
            in_ws = true;
        } else {
            if (in_ws && !out.empty()) out.push_back(' ');
            out.push_back(static_cast<char>(c));
            in_ws = false;
        }
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view s) {
    std::vector<std::string> tokens;
    std::string cur;
    for (unsigned char c : s) {
        if (is_token_char(c)) {
            cur.push_back(static_cast<char>(c < 0x80 ? std::tolower(c) : c));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

std::vector<std::string> content_tokens(std::string_view s) {
    std::vector<std::string> out;
    for (auto& t : tokenize(s)) {
        if (!is_stopword(t)) out.push_back(std::move(t));
    }
    return out;
}

bool is_stopword(std::string_view token) {
    return stopword_set().count(std::string(token)) > 0;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            break;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool icontains(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    if (haystack.size() < needle.size()) return false;
    auto it = std::search(
        haystack.begin(), haystack.end(), needle.begin(), needle.end(),
        [](unsigned char a, unsigned char b) { return std::tolower(a) == std::tolower(b); });
    return it != haystack.end();
}

}  // namespace fairseek
