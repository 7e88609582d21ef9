#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fairseek {

/// One node of a parsed HTML document: either an element (lowercase tag,
/// attributes, children) or a text run. The parser is deliberately lenient —
/// it never throws, mismatched close tags are recovered from, and unknown
/// constructs degrade to text.
struct HtmlNode {
    enum class Kind { element, text };

    Kind kind = Kind::element;
    std::string tag;                           // lowercase; empty for text
    std::map<std::string, std::string> attrs;  // lowercase names, decoded values
    std::string text;                          // decoded; text nodes only
    std::vector<std::unique_ptr<HtmlNode>> children;

    bool is_element(std::string_view name) const {
        return kind == Kind::element && tag == name;
    }
    const std::string* attr(const std::string& name) const {
        auto it = attrs.find(name);
        return it == attrs.end() ? nullptr : &it->second;
    }
    bool has_attr(const std::string& name) const { return attrs.count(name) > 0; }

    /// Concatenated text of this subtree, raw (no whitespace normalization).
    std::string text_content() const;

    /// Depth-first visit of every node. Return false from the visitor to
    /// skip a subtree's children.
    template <typename F>
    void walk(F&& visit) const {
        if (!visit(*this)) return;
        for (const auto& c : children) c->walk(visit);
    }
};

/// Parses a (possibly malformed) HTML document into a tree rooted at a
/// synthetic element with tag "#root".
std::unique_ptr<HtmlNode> parse_html(std::string_view html);

/// Decodes the common named entities plus numeric character references.
std::string decode_entities(std::string_view s);

}  // namespace fairseek
