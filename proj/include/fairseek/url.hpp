#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fairseek {

/// Minimal URL split roughly along RFC 3986 component boundaries. Enough for
/// reference resolution, origin extraction and host/path routing; not a
/// validating parser.
struct Url {
    std::string scheme;     // lowercase, no ':'
    std::string authority;  // host[:port], may include userinfo
    std::string path;
    std::string query;      // without '?'
    std::string fragment;   // without '#'
    bool has_authority = false;
    bool has_query = false;
    bool has_fragment = false;

    static Url parse(std::string_view s);

    std::string to_string() const;

    std::string host() const;
    /// Port if present, else the scheme default (80/443), else -1.
    int port_or_default() const;
    /// scheme://authority
    std::string origin() const;
    /// path?query — what an HTTP client puts on the request line.
    std::string request_target() const;
};

/// RFC 3986 section 5 reference resolution (strict form), including
/// dot-segment removal. `base` should be an absolute URL.
std::string resolve_url(std::string_view base, std::string_view reference);

/// True for syntactically plausible absolute http(s) URLs with a host.
bool is_absolute_http_url(std::string_view s);

}  // namespace fairseek
