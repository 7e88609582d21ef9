#include "fairseek/queries.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "fairseek/errors.hpp"
#include "fairseek/text.hpp"

namespace fairseek {

namespace {

using nlohmann::json;

bool matches(const Query& q, const QueryFilter& f) {
    if (f.language && q.language != *f.language) return false;
    if (f.style && q.style != *f.style) return false;
    return true;
}

void check_and_push(std::vector<Query>& out, std::unordered_set<std::string>& seen,
                    Query q, const QueryFilter& filter, long line) {
    q.text = trim(q.text);
    if (q.id.empty()) throw ParseError("query row missing id", line);
    if (q.text.empty()) throw ParseError("query text empty after trim", line);
    if (!seen.insert(q.id).second) {
        throw ValidationError("duplicate query id '" + q.id + "'");
    }
    if (matches(q, filter)) out.push_back(std::move(q));
}

std::vector<Query> parse_tsv(const std::string& content, const QueryFilter& filter) {
    std::vector<Query> out;
    std::unordered_set<std::string> seen;
    std::istringstream in(content);
    std::string row;
    long line = 0;
    while (std::getline(in, row)) {
        ++line;
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (trim(row).empty()) continue;
        auto cols = split(row, '\t');
        if (line == 1 && lower_ascii(trim(cols[0])) == "id") continue;  // header
        if (cols.size() < 2) throw ParseError("expected at least id and text columns", line);
        Query q;
        q.id = trim(cols[0]);
        q.text = cols[1];
        q.language = cols.size() > 2 && !trim(cols[2]).empty() ? trim(cols[2]) : "en";
        try {
            q.style = cols.size() > 3 && !trim(cols[3]).empty()
                          ? query_style_from_string(trim(cols[3]))
                          : QueryStyle::keyword;
        } catch (const Error& e) {
            throw ParseError(e.what(), line);
        }
        check_and_push(out, seen, std::move(q), filter, line);
    }
    return out;
}

std::vector<Query> parse_json(const std::string& content, const QueryFilter& filter) {
    json doc;
    try {
        doc = json::parse(content);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid query JSON: ") + e.what());
    }
    if (doc.is_null()) return {};
    if (!doc.is_array()) throw ParseError("query JSON must be an array of objects");

    std::vector<Query> out;
    std::unordered_set<std::string> seen;
    long idx = 0;
    for (const auto& item : doc) {
        ++idx;
        if (!item.is_object()) throw ParseError("query entry is not an object", idx);
        Query q;
        q.id = item.value("id", "");
        q.text = item.value("text", "");
        q.language = item.value("language", "en");
        try {
            q.style = query_style_from_string(item.value("style", "keyword"));
        } catch (const Error& e) {
            throw ParseError(e.what(), idx);
        }
        check_and_push(out, seen, std::move(q), filter, idx);
    }
    return out;
}

}  // namespace

std::string to_string(QueryStyle s) {
    return s == QueryStyle::keyword ? "keyword" : "natural_language";
}

QueryStyle query_style_from_string(const std::string& s) {
    if (s == "keyword") return QueryStyle::keyword;
    if (s == "natural_language") return QueryStyle::natural_language;
    throw ValidationError("unknown query style '" + s + "'");
}

std::vector<Query> parse_queries(const std::string& content, const std::string& format,
                                 const QueryFilter& filter) {
    if (format == "tsv") return parse_tsv(content, filter);
    if (format == "json") return parse_json(content, filter);
    throw ContractError("unknown query format '" + format + "'");
}

std::vector<Query> load_queries(const std::filesystem::path& path,
                                const QueryFilter& filter) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw NotFoundError("query file not found: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string ext = lower_ascii(path.extension().string());
    std::string format = ext == ".json" ? "json" : "tsv";
    return parse_queries(buf.str(), format, filter);
}

}  // namespace fairseek
