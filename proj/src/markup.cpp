#include "fairseek/markup.hpp"

#include <charconv>

#include "fairseek/html.hpp"
#include "fairseek/text.hpp"
#include "fairseek/url.hpp"

namespace fairseek {

namespace {

using nlohmann::json;

// "Dataset", "schema:Dataset", "https://schema.org/Dataset" all count.
bool type_token_is_dataset(const std::string& t) {
    std::string tail = t;
    if (size_t pos = tail.find_last_of("/#:"); pos != std::string::npos) {
        tail = tail.substr(pos + 1);
    }
    return tail == "Dataset";
}

bool node_is_dataset(const json& node) {
    if (!node.is_object() || !node.contains("@type")) return false;
    const json& t = node["@type"];
    if (t.is_string()) return type_token_is_dataset(t.get<std::string>());
    if (t.is_array()) {
        for (const auto& item : t) {
            if (item.is_string() && type_token_is_dataset(item.get<std::string>())) return true;
        }
    }
    return false;
}

void collect_dataset_nodes(const json& doc, std::vector<json>& out, int& non_dataset) {
    if (doc.is_array()) {
        for (const auto& item : doc) collect_dataset_nodes(item, out, non_dataset);
        return;
    }
    if (!doc.is_object()) return;
    if (node_is_dataset(doc)) {
        out.push_back(doc);
    } else if (doc.contains("@type")) {
        ++non_dataset;
    }
    if (doc.contains("@graph")) {
        collect_dataset_nodes(doc["@graph"], out, non_dataset);
    }
}

bool itemtype_is_dataset(const std::string& itemtype) {
    for (const auto& token : split(itemtype, ' ')) {
        if (type_token_is_dataset(trim(token))) return true;
    }
    return false;
}

// Microdata value extraction per element kind.
json microdata_value(const HtmlNode& n);

json microdata_object(const HtmlNode& scope) {
    json obj = json::object();
    if (const std::string* t = scope.attr("itemtype")) {
        std::string tail = *t;
        if (size_t pos = tail.find_last_of('/'); pos != std::string::npos) {
            tail = tail.substr(pos + 1);
        }
        obj["@type"] = tail;
    }
    // Collect itemprops without crossing into nested itemscopes.
    std::vector<const HtmlNode*> pending;
    for (const auto& c : scope.children) pending.push_back(c.get());
    while (!pending.empty()) {
        const HtmlNode* n = pending.back();
        pending.pop_back();
        if (n->kind != HtmlNode::Kind::element) continue;
        if (const std::string* prop = n->attr("itemprop")) {
            json value = n->has_attr("itemscope") ? microdata_object(*n) : microdata_value(*n);
            for (const auto& name : split(*prop, ' ')) {
                std::string key = trim(name);
                if (key.empty()) continue;
                if (!obj.contains(key)) {
                    obj[key] = value;
                } else if (obj[key].is_array()) {
                    obj[key].push_back(value);
                } else {
                    obj[key] = json::array({obj[key], value});
                }
            }
        }
        if (n->has_attr("itemscope")) continue;  // handled above or a new item
        for (const auto& c : n->children) pending.push_back(c.get());
    }
    return obj;
}

json microdata_value(const HtmlNode& n) {
    if (n.tag == "a" || n.tag == "link" || n.tag == "area") {
        if (const std::string* href = n.attr("href")) return *href;
    }
    if (n.tag == "img" || n.tag == "audio" || n.tag == "video" ||
        n.tag == "source" || n.tag == "embed" || n.tag == "iframe") {
        if (const std::string* src = n.attr("src")) return *src;
    }
    if (n.tag == "meta") {
        if (const std::string* content = n.attr("content")) return *content;
    }
    if (n.tag == "time") {
        if (const std::string* dt = n.attr("datetime")) return *dt;
    }
    if (const std::string* content = n.attr("content")) return *content;
    return collapse_whitespace(n.text_content());
}

// ---- normalize helpers ----

std::optional<std::string> first_scalar(const json& v) {
    if (v.is_string()) {
        std::string s = trim(v.get<std::string>());
        if (!s.empty()) return s;
        return std::nullopt;
    }
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_float()) return std::to_string(v.get<double>());
    if (v.is_array()) {
        for (const auto& item : v) {
            if (auto s = first_scalar(item)) return s;
        }
    }
    if (v.is_object()) {
        for (const char* key : {"name", "value", "@value", "@id", "url"}) {
            if (v.contains(key)) {
                if (auto s = first_scalar(v[key])) return s;
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> prop_scalar(const json& node, const char* key) {
    if (!node.contains(key)) return std::nullopt;
    return first_scalar(node[key]);
}

std::vector<std::string> prop_strings(const json& node, const char* key) {
    std::vector<std::string> out;
    if (!node.contains(key)) return out;
    const json& v = node[key];
    if (v.is_array()) {
        for (const auto& item : v) {
            if (auto s = first_scalar(item)) out.push_back(*s);
        }
    } else if (auto s = first_scalar(v)) {
        out.push_back(*s);
    }
    return out;
}

}  // namespace

std::vector<RawMarkupBlock> extract_dataset_markup(std::string_view html,
                                                   const std::string& source_url,
                                                   ExtractDiagnostics* diag) {
    ExtractDiagnostics local;
    ExtractDiagnostics& d = diag ? *diag : local;
    std::vector<RawMarkupBlock> blocks;

    auto root = parse_html(html);
    root->walk([&](const HtmlNode& n) {
        if (n.is_element("script")) {
            const std::string* type = n.attr("type");
            if (type && icontains(*type, "ld+json")) {
                json doc;
                try {
                    doc = json::parse(n.text_content());
                } catch (const json::exception&) {
                    ++d.unparseable_json_ld;
                    return true;
                }
                std::vector<json> nodes;
                collect_dataset_nodes(doc, nodes, d.non_dataset_blocks);
                for (auto& node : nodes) {
                    blocks.push_back({MarkupEncoding::json_ld, std::move(node), source_url});
                }
            }
            return true;
        }
        if (n.kind == HtmlNode::Kind::element && n.has_attr("itemscope")) {
            const std::string* itemtype = n.attr("itemtype");
            if (itemtype && itemtype_is_dataset(*itemtype)) {
                blocks.push_back({MarkupEncoding::microdata, microdata_object(n), source_url});
                return false;  // nested datasets inside a dataset are not split out
            }
        }
        return true;
    });
    return blocks;
}

bool parse_iso8601_date(std::string_view s, std::string* date_out) {
    std::string str = trim(s);
    if (str.size() < 10) return false;
    std::string date = str.substr(0, 10);
    if (date[4] != '-' || date[7] != '-') return false;
    int y = 0, m = 0, d = 0;
    auto parse_int = [](std::string_view sv, int& out) {
        auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), out);
        return ec == std::errc() && p == sv.data() + sv.size();
    };
    if (!parse_int(date.substr(0, 4), y) || !parse_int(date.substr(5, 2), m) ||
        !parse_int(date.substr(8, 2), d)) {
        return false;
    }
    if (m < 1 || m > 12 || d < 1 || d > 31) return false;
    static const int days_in[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    int max_d = days_in[m - 1] + (m == 2 && leap ? 1 : 0);
    if (d > max_d) return false;
    // Anything after the date must be a time part.
    if (str.size() > 10 && str[10] != 'T' && str[10] != ' ') return false;
    if (date_out) *date_out = date;
    return true;
}

DatasetMetadata normalize(const RawMarkupBlock& block, NormalizeDiagnostics* diag) {
    const json& node = block.payload;
    DatasetMetadata rec;

    auto name = prop_scalar(node, "name");
    if (!name) throw NormalizationError("dataset block has no name", node);
    rec.name = *name;

    rec.description = prop_scalar(node, "description").value_or("");

    std::string url = prop_scalar(node, "url").value_or("");
    rec.landing_url = url.empty() ? block.source_url : resolve_url(block.source_url, url);

    rec.identifier = prop_scalar(node, "identifier");
    rec.license = prop_scalar(node, "license");

    if (auto dm = prop_scalar(node, "dateModified")) {
        std::string date;
        if (parse_iso8601_date(*dm, &date)) {
            rec.date_modified = date;
        } else if (diag) {
            diag->notes.push_back("dropped non-ISO dateModified '" + *dm + "'");
        }
    }

    rec.keywords = prop_strings(node, "keywords");

    if (node.contains("distribution")) {
        const json& dist = node["distribution"];
        auto add = [&](const json& entry) {
            Distribution d;
            if (entry.is_string()) {
                d.content_url = resolve_url(block.source_url, entry.get<std::string>());
            } else if (entry.is_object()) {
                if (auto fmt = prop_scalar(entry, "encodingFormat")) {
                    d.encoding_format = *fmt;
                } else if (auto fmt2 = prop_scalar(entry, "fileFormat")) {
                    d.encoding_format = *fmt2;
                }
                if (auto cu = prop_scalar(entry, "contentUrl")) {
                    d.content_url = resolve_url(block.source_url, *cu);
                }
            }
            if (d.encoding_format.empty() && d.content_url.empty()) {
                if (diag) diag->notes.push_back("dropped empty distribution entry");
                return;
            }
            rec.distributions.push_back(std::move(d));
        };
        if (dist.is_array()) {
            for (const auto& entry : dist) add(entry);
        } else {
            add(dist);
        }
    }

    if (auto creator = prop_scalar(node, "creator")) {
        rec.creator = creator;
    } else if (auto author = prop_scalar(node, "author")) {
        rec.creator = author;
    }
    return rec;
}

}  // namespace fairseek
