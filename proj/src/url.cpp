#include "fairseek/url.hpp"

#include <algorithm>
#include <cctype>

#include "fairseek/text.hpp"

namespace fairseek {

namespace {

bool scheme_char(unsigned char c) {
    return std::isalnum(c) || c == '+' || c == '-' || c == '.';
}

// RFC 3986 5.2.4
std::string remove_dot_segments(std::string_view input) {
    std::string in(input);
    std::string out;
    while (!in.empty()) {
        if (starts_with(in, "../")) {
            in.erase(0, 3);
        } else if (starts_with(in, "./")) {
            in.erase(0, 2);
        } else if (starts_with(in, "/./")) {
            in.erase(0, 2);  // keep leading '/'
        } else if (in == "/.") {
            in = "/";
        } else if (starts_with(in, "/../") || in == "/..") {
            in = in == "/.." ? std::string("/") : in.substr(3);
            size_t pos = out.find_last_of('/');
            out.erase(pos == std::string::npos ? 0 : pos);
        } else if (in == "." || in == "..") {
            in.clear();
        } else {
            size_t start = in[0] == '/' ? 1 : 0;
            size_t pos = in.find('/', start);
            out += in.substr(0, pos == std::string::npos ? in.size() : pos);
            in.erase(0, pos == std::string::npos ? in.size() : pos);
        }
    }
    return out;
}

// RFC 3986 5.2.3
std::string merge_paths(const Url& base, const std::string& ref_path) {
    if (base.has_authority && base.path.empty()) return "/" + ref_path;
    size_t pos = base.path.find_last_of('/');
    if (pos == std::string::npos) return ref_path;
    return base.path.substr(0, pos + 1) + ref_path;
}

}  // namespace

Url Url::parse(std::string_view s) {
    Url u;
    // fragment
    if (size_t pos = s.find('#'); pos != std::string_view::npos) {
        u.fragment = std::string(s.substr(pos + 1));
        u.has_fragment = true;
        s = s.substr(0, pos);
    }
    // query
    if (size_t pos = s.find('?'); pos != std::string_view::npos) {
        u.query = std::string(s.substr(pos + 1));
        u.has_query = true;
        s = s.substr(0, pos);
    }
    // scheme: ALPHA *(scheme_char) ':'
    size_t colon = s.find(':');
    if (colon != std::string_view::npos && colon > 0 &&
        std::isalpha(static_cast<unsigned char>(s[0]))) {
        bool ok = true;
        for (size_t i = 1; i < colon; ++i) {
            if (!scheme_char(static_cast<unsigned char>(s[i]))) { ok = false; break; }
        }
        // a '/' before the colon means the colon belongs to the path
        if (ok && s.substr(0, colon).find('/') == std::string_view::npos) {
            u.scheme = lower_ascii(s.substr(0, colon));
            s = s.substr(colon + 1);
        }
    }
    // authority
    if (starts_with(s, "//")) {
        u.has_authority = true;
        s = s.substr(2);
        size_t end = s.find('/');
        u.authority = std::string(s.substr(0, end));
        s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
    }
    u.path = std::string(s);
    return u;
}

std::string Url::to_string() const {
    std::string out;
    if (!scheme.empty()) out += scheme + ":";
    if (has_authority) out += "//" + authority;
    out += path;
    if (has_query) out += "?" + query;
    if (has_fragment) out += "#" + fragment;
    return out;
}

std::string Url::host() const {
    std::string h = authority;
    if (size_t at = h.rfind('@'); at != std::string::npos) h.erase(0, at + 1);
    if (!h.empty() && h[0] == '[') {  // IPv6 literal
        size_t close = h.find(']');
        return h.substr(0, close == std::string::npos ? h.size() : close + 1);
    }
    if (size_t colon = h.find(':'); colon != std::string::npos) h.erase(colon);
    return h;
}

int Url::port_or_default() const {
    std::string h = authority;
    if (size_t at = h.rfind('@'); at != std::string::npos) h.erase(0, at + 1);
    size_t colon = h[0] == '[' ? h.find(':', h.find(']') + 1) : h.find(':');
    if (!h.empty() && colon != std::string::npos && colon + 1 < h.size()) {
        try {
            return std::stoi(h.substr(colon + 1));
        } catch (...) {
            return -1;
        }
    }
    if (scheme == "http") return 80;
    if (scheme == "https") return 443;
    return -1;
}

std::string Url::origin() const {
    return scheme + "://" + authority;
}

std::string Url::request_target() const {
    std::string t = path.empty() ? "/" : path;
    if (has_query) t += "?" + query;
    return t;
}

std::string resolve_url(std::string_view base_str, std::string_view reference) {
    Url base = Url::parse(base_str);
    Url ref = Url::parse(reference);
    Url out;

    if (!ref.scheme.empty()) {
        out = ref;
        out.path = remove_dot_segments(out.path);
        return out.to_string();
    }
    out.scheme = base.scheme;
    if (ref.has_authority) {
        out.has_authority = true;
        out.authority = ref.authority;
        out.path = remove_dot_segments(ref.path);
        out.query = ref.query;
        out.has_query = ref.has_query;
    } else {
        out.has_authority = base.has_authority;
        out.authority = base.authority;
        if (ref.path.empty()) {
            out.path = base.path;
            out.query = ref.has_query ? ref.query : base.query;
            out.has_query = ref.has_query || base.has_query;
        } else {
            out.path = ref.path[0] == '/' ? remove_dot_segments(ref.path)
                                          : remove_dot_segments(merge_paths(base, ref.path));
            out.query = ref.query;
            out.has_query = ref.has_query;
        }
    }
    out.fragment = ref.fragment;
    out.has_fragment = ref.has_fragment;
    return out.to_string();
}

bool is_absolute_http_url(std::string_view s) {
    Url u = Url::parse(s);
    return (u.scheme == "http" || u.scheme == "https") && !u.host().empty();
}

}  // namespace fairseek
