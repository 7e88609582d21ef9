#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairseek/metadata.hpp"

namespace fairseek {

enum class LicenseClass { commercial_ok, noncommercial, unknown };
enum class DataType { tabular, geospatial, image, text, other };

std::string to_string(LicenseClass c);
std::string to_string(DataType t);
LicenseClass license_class_from_string(const std::string& s);
DataType data_type_from_string(const std::string& s);

/// Maps license identifiers and URLs onto a usage class via a shipped
/// lookup table. Anything unrecognized is `unknown`.
LicenseClass classify_license(std::string_view raw);
inline LicenseClass classify_license(const std::optional<std::string>& raw) {
    return raw ? classify_license(std::string_view(*raw)) : LicenseClass::unknown;
}

/// Derives a coarse data type from distribution formats (media type or
/// extension, content URL extension as fallback). Priority when formats
/// mix: tabular > geospatial > image > text. No distributions -> other.
DataType classify_data_type(const DatasetMetadata& record);

/// Deterministic facet filter for search. reference_date must always be
/// explicit so runs are reproducible later.
struct FacetConstraints {
    std::optional<LicenseClass> license_class;
    std::optional<DataType> data_type;
    std::optional<int> last_updated_within_days;  // > 0 when present
    std::string reference_date;                   // ISO-8601 date

    bool satisfied_by(const DatasetMetadata& record) const;
};

struct SearchHit {
    DatasetMetadata record;
    double score = 0.0;  // > 0; hits sorted by (score desc, landing_url asc)
    std::vector<std::string> matched_terms;
};

struct IndexBuildDiagnostics {
    int duplicate_urls = 0;
};

/// Keyword index over validated DatasetMetadata with BM25 ranking
/// (k1 = 1.2, b = 0.75, name tokens at 2x weight) and exact facet
/// filtering. Immutable after build; queries are safe to run in parallel.
class DatasetIndex {
public:
    static DatasetIndex build(const std::vector<DatasetMetadata>& records,
                              IndexBuildDiagnostics* diag = nullptr);

    /// Records matching at least one keyword token and every present facet,
    /// ranked, truncated to `limit`. Throws ContractError on an empty
    /// keyword string or limit < 1.
    std::vector<SearchHit> search(const std::string& keywords, const FacetConstraints& facets,
                                  std::size_t limit) const;

    std::size_t size() const { return docs_.size(); }

    /// Postings lookup, exposed for verification against corpus scans.
    std::vector<std::string> documents_containing(const std::string& token) const;

    /// Directory persistence with a versioned magic header; loading an
    /// incompatible or foreign directory fails loudly.
    void save(const std::filesystem::path& dir) const;
    static DatasetIndex load(const std::filesystem::path& dir);

private:
    struct Doc {
        DatasetMetadata record;
        std::map<std::string, double> term_weights;  // weighted tf per token
        double weighted_length = 0.0;
    };

    void build_postings();

    std::vector<Doc> docs_;
    std::map<std::string, std::vector<std::uint32_t>> postings_;
    double avg_length_ = 0.0;
};

}  // namespace fairseek
