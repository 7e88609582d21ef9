#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fairseek/metadata.hpp"

namespace fairseek {

enum class MarkupEncoding { json_ld, microdata };

/// One schema.org/Dataset node lifted out of a page, before normalization.
/// For microdata the itemprop tree is rewritten into the same key shapes
/// JSON-LD uses, so normalize() handles both encodings uniformly.
struct RawMarkupBlock {
    MarkupEncoding encoding = MarkupEncoding::json_ld;
    nlohmann::json payload;
    std::string source_url;
};

struct ExtractDiagnostics {
    int unparseable_json_ld = 0;
    int non_dataset_blocks = 0;
};

/// Pulls every JSON-LD script block and microdata itemscope whose type
/// resolves to schema.org Dataset. @graph containers and top-level arrays
/// are flattened to one block per Dataset node. Broken JSON-LD is skipped
/// and tallied, never fatal.
std::vector<RawMarkupBlock> extract_dataset_markup(std::string_view html,
                                                   const std::string& source_url,
                                                   ExtractDiagnostics* diag = nullptr);

struct NormalizeDiagnostics {
    std::vector<std::string> notes;  // e.g. dropped non-ISO dates
};

/// Maps a Dataset markup block onto the canonical record shape: first scalar
/// for name/description, full lists for keywords/distributions, relative
/// content URLs resolved against the source page. Throws NormalizationError
/// when the block has no usable name.
DatasetMetadata normalize(const RawMarkupBlock& block, NormalizeDiagnostics* diag = nullptr);

/// Normalization failure; carries the offending payload for diagnostics.
class NormalizationError : public std::runtime_error {
public:
    NormalizationError(const std::string& what, nlohmann::json block)
        : std::runtime_error(what), block_(std::move(block)) {}
    const nlohmann::json& block() const { return block_; }

private:
    nlohmann::json block_;
};

/// True when the ISO-8601 string is a calendar-valid date or date-time.
/// Returns the date part (YYYY-MM-DD) via `date_out` when valid.
bool parse_iso8601_date(std::string_view s, std::string* date_out = nullptr);

}  // namespace fairseek
