#include "fairseek/metadata.hpp"

#include <fstream>

#include "fairseek/errors.hpp"
#include "fairseek/text.hpp"
#include "fairseek/url.hpp"

namespace fairseek {

using nlohmann::json;

void to_json(json& j, const Distribution& d) {
    j = json::object();
    if (!d.encoding_format.empty()) j["encoding_format"] = d.encoding_format;
    if (!d.content_url.empty()) j["content_url"] = d.content_url;
}

void from_json(const json& j, Distribution& d) {
    d.encoding_format = j.value("encoding_format", "");
    d.content_url = j.value("content_url", "");
}

void to_json(json& j, const DatasetMetadata& m) {
    j = json{{"name", m.name},
             {"description", m.description},
             {"landing_url", m.landing_url},
             {"keywords", m.keywords},
             {"distributions", m.distributions}};
    if (m.identifier) j["identifier"] = *m.identifier;
    if (m.license) j["license"] = *m.license;
    if (m.date_modified) j["date_modified"] = *m.date_modified;
    if (m.creator) j["creator"] = *m.creator;
}

void from_json(const json& j, DatasetMetadata& m) {
    m.name = j.value("name", "");
    m.description = j.value("description", "");
    m.landing_url = j.value("landing_url", "");
    m.keywords = j.value("keywords", std::vector<std::string>{});
    m.distributions = j.value("distributions", std::vector<Distribution>{});
    if (j.contains("identifier")) m.identifier = j["identifier"].get<std::string>();
    if (j.contains("license")) m.license = j["license"].get<std::string>();
    if (j.contains("date_modified")) m.date_modified = j["date_modified"].get<std::string>();
    if (j.contains("creator")) m.creator = j["creator"].get<std::string>();
}

json emit_json_ld(const DatasetMetadata& record) {
    json ld{{"@context", "https://schema.org"},
            {"@type", "Dataset"},
            {"name", record.name},
            {"url", record.landing_url}};
    if (!record.description.empty()) ld["description"] = record.description;
    if (record.identifier) ld["identifier"] = *record.identifier;
    if (record.license) ld["license"] = *record.license;
    if (record.date_modified) ld["dateModified"] = *record.date_modified;
    if (record.creator) ld["creator"] = *record.creator;
    if (!record.keywords.empty()) ld["keywords"] = record.keywords;
    if (!record.distributions.empty()) {
        json dist = json::array();
        for (const auto& d : record.distributions) {
            json entry{{"@type", "DataDownload"}};
            if (!d.encoding_format.empty()) entry["encodingFormat"] = d.encoding_format;
            if (!d.content_url.empty()) entry["contentUrl"] = d.content_url;
            dist.push_back(std::move(entry));
        }
        ld["distribution"] = std::move(dist);
    }
    return ld;
}

std::vector<DatasetMetadata> read_ndjson_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw NotFoundError("corpus file not found: " + path);
    std::vector<DatasetMetadata> records;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        try {
            records.push_back(json::parse(line).get<DatasetMetadata>());
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad corpus record: ") + e.what(), line_no);
        }
    }
    return records;
}

void write_ndjson_corpus(const std::string& path, const std::vector<DatasetMetadata>& records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write corpus file: " + path);
    for (const auto& r : records) {
        out << json(r).dump() << "\n";
    }
}

ValidityVerdict validate(const DatasetMetadata& record, const ValidityRules& rules) {
    ValidityVerdict v;
    std::string name = trim(record.name);
    if (name.empty()) {
        v.reasons.push_back("empty_name");
    } else {
        std::string lowered = lower_ascii(name);
        for (const auto& stop : rules.name_stoplist) {
            if (lowered == lower_ascii(stop)) {
                v.reasons.push_back("boilerplate_name");
                break;
            }
        }
    }
    bool has_content = trim(record.description).size() >= rules.min_description_chars ||
                       !record.distributions.empty() || !record.keywords.empty();
    if (!has_content) v.reasons.push_back("no_content");
    if (!is_absolute_http_url(record.landing_url)) v.reasons.push_back("invalid_landing_url");
    v.valid = v.reasons.empty();
    return v;
}

}  // namespace fairseek
