#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fairseek {

/// One way a dataset can be obtained: a media type / extension token,
/// a download URL, or both (never neither).
struct Distribution {
    std::string encoding_format;  // media type or extension token, may be empty
    std::string content_url;      // absolute URL, may be empty

    bool operator==(const Distribution&) const = default;
};

/// Normalized schema.org/Dataset record — the corpus interchange unit.
struct DatasetMetadata {
    std::string name;
    std::string description;
    std::string landing_url;
    std::optional<std::string> identifier;
    std::optional<std::string> license;
    std::optional<std::string> date_modified;  // ISO-8601 date (YYYY-MM-DD)
    std::vector<std::string> keywords;
    std::vector<Distribution> distributions;
    std::optional<std::string> creator;

    bool operator==(const DatasetMetadata&) const = default;
};

void to_json(nlohmann::json& j, const Distribution& d);
void from_json(const nlohmann::json& j, Distribution& d);
void to_json(nlohmann::json& j, const DatasetMetadata& m);
void from_json(const nlohmann::json& j, DatasetMetadata& m);

/// Re-emits a record as schema.org JSON-LD (inverse of normalize for the
/// fields this harness carries).
nlohmann::json emit_json_ld(const DatasetMetadata& record);

/// Newline-delimited JSON corpus files.
std::vector<DatasetMetadata> read_ndjson_corpus(const std::string& path);
void write_ndjson_corpus(const std::string& path, const std::vector<DatasetMetadata>& records);

/// Rule-based stand-in for a learned dataset-or-not filter. All rules are
/// explicit and configurable so a model could be slotted in later.
struct ValidityRules {
    std::vector<std::string> name_stoplist = {"dataset", "untitled", "unnamed", "data", "test"};
    std::size_t min_description_chars = 20;
};

struct ValidityVerdict {
    bool valid = false;
    std::vector<std::string> reasons;  // rule ids; non-empty iff !valid
};

/// Rule ids: empty_name, boilerplate_name, no_content, invalid_landing_url.
/// A record passes when the name is real, the landing URL is an absolute
/// http(s) URL, and it has at least one of: a description of
/// min_description_chars+, a distribution, a keyword.
ValidityVerdict validate(const DatasetMetadata& record, const ValidityRules& rules = {});

}  // namespace fairseek
