#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fairseek {

enum class QueryStyle { keyword, natural_language };

std::string to_string(QueryStyle s);
QueryStyle query_style_from_string(const std::string& s);

/// One benchmark query. Text is stored verbatim — agents own any rewriting.
struct Query {
    std::string id;
    std::string text;
    std::string language;  // ISO 639-1
    QueryStyle style = QueryStyle::keyword;

    bool operator==(const Query&) const = default;
};

struct QueryFilter {
    std::optional<std::string> language;
    std::optional<QueryStyle> style;
};

/// Loads queries from a TSV file (columns: id, text, language, style; an
/// optional header line is recognized) or a JSON array of objects with the
/// same keys. Rows missing language/style default to "en"/keyword.
///
/// Throws ParseError naming the offending line for malformed rows and
/// ValidationError for duplicate ids. Filtered rows keep input order.
std::vector<Query> load_queries(const std::filesystem::path& path,
                                const QueryFilter& filter = {});

/// Same contract, but from an in-memory document. `format` is "tsv" or
/// "json"; load_queries picks it from the file extension.
std::vector<Query> parse_queries(const std::string& content, const std::string& format,
                                 const QueryFilter& filter = {});

}  // namespace fairseek
