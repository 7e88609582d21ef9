#include "fairseek/html.hpp"

#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "fairseek/text.hpp"

namespace fairseek {

namespace {

const std::unordered_set<std::string>& void_elements() {
    static const std::unordered_set<std::string> v = {
        "area", "base", "br", "col", "embed", "hr", "img", "input",
        "link", "meta", "param", "source", "track", "wbr",
    };
    return v;
}

// Content is raw text up to the matching close tag.
const std::unordered_set<std::string>& raw_text_elements() {
    static const std::unordered_set<std::string> v = {"script", "style", "textarea", "title"};
    return v;
}

// Block-ish elements that implicitly close an open <p>.
const std::unordered_set<std::string>& p_closers() {
    static const std::unordered_set<std::string> v = {
        "p", "div", "ul", "ol", "li", "table", "h1", "h2", "h3", "h4", "h5",
        "h6", "blockquote", "pre", "section", "article", "header", "footer",
        "nav", "aside", "form",
    };
    return v;
}

void append_utf8(std::string& out, unsigned long cp) {
    if (cp == 0 || cp > 0x10FFFF) cp = 0xFFFD;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

struct Parser {
    std::string_view src;
    size_t pos = 0;

    bool eof() const { return pos >= src.size(); }
    char peek(size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }

    void parse_into(HtmlNode& root) {
        std::vector<HtmlNode*> stack = {&root};
        std::string text_buf;

        auto flush_text = [&]() {
            if (text_buf.empty()) return;
            auto node = std::make_unique<HtmlNode>();
            node->kind = HtmlNode::Kind::text;
            node->text = decode_entities(text_buf);
            stack.back()->children.push_back(std::move(node));
            text_buf.clear();
        };

        while (!eof()) {
            if (peek() != '<') {
                text_buf.push_back(src[pos++]);
                continue;
            }
            if (starts_with(src.substr(pos), "<!--")) {
                flush_text();
                size_t end = src.find("-->", pos + 4);
                pos = end == std::string_view::npos ? src.size() : end + 3;
                continue;
            }
            if (peek(1) == '!' || peek(1) == '?') {  // doctype, CDATA, PI
                flush_text();
                size_t end = src.find('>', pos);
                pos = end == std::string_view::npos ? src.size() : end + 1;
                continue;
            }
            if (peek(1) == '/') {
                flush_text();
                close_tag(stack);
                continue;
            }
            if (!std::isalpha(static_cast<unsigned char>(peek(1)))) {
                text_buf.push_back(src[pos++]);  // stray '<'
                continue;
            }
            flush_text();
            open_tag(stack);
        }
        flush_text();
    }

    void close_tag(std::vector<HtmlNode*>& stack) {
        pos += 2;  // "</"
        std::string name = read_tag_name();
        skip_to_gt();
        // pop to the matching element; ignore a close with no open partner
        for (size_t i = stack.size(); i-- > 1;) {
            if (stack[i]->tag == name) {
                stack.resize(i);
                return;
            }
        }
    }

    void open_tag(std::vector<HtmlNode*>& stack) {
        ++pos;  // '<'
        auto node = std::make_unique<HtmlNode>();
        node->tag = read_tag_name();
        bool self_closing = read_attributes(*node);

        implied_closes(stack, node->tag);

        HtmlNode* raw = node.get();
        stack.back()->children.push_back(std::move(node));

        if (self_closing || void_elements().count(raw->tag)) return;

        if (raw_text_elements().count(raw->tag)) {
            read_raw_text(*raw);
            return;
        }
        stack.push_back(raw);
    }

    void implied_closes(std::vector<HtmlNode*>& stack, const std::string& tag) {
        auto top = [&]() { return stack.back()->tag; };
        if (stack.size() <= 1) return;
        if (tag == "li" && top() == "li") stack.pop_back();
        if ((tag == "td" || tag == "th") && (top() == "td" || top() == "th")) stack.pop_back();
        if (tag == "tr") {
            if (top() == "td" || top() == "th") stack.pop_back();
            if (stack.size() > 1 && top() == "tr") stack.pop_back();
        }
        if (stack.size() > 1 && top() == "p" && p_closers().count(tag)) stack.pop_back();
    }

    std::string read_tag_name() {
        std::string name;
        while (!eof()) {
            unsigned char c = static_cast<unsigned char>(peek());
            if (std::isalnum(c) || c == '-' || c == ':') {
                name.push_back(static_cast<char>(std::tolower(c)));
                ++pos;
            } else {
                break;
            }
        }
        return name;
    }

    // Returns true when the tag ends with "/>".
    bool read_attributes(HtmlNode& node) {
        while (!eof()) {
            while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
            if (peek() == '>') {
                ++pos;
                return false;
            }
            if (peek() == '/' && peek(1) == '>') {
                pos += 2;
                return true;
            }
            if (eof()) return false;

            std::string name;
            while (!eof()) {
                char c = peek();
                if (c == '=' || c == '>' || c == '/' ||
                    std::isspace(static_cast<unsigned char>(c))) break;
                name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
                ++pos;
            }
            if (name.empty()) { ++pos; continue; }

            std::string value;
            while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
            if (peek() == '=') {
                ++pos;
                while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
                if (peek() == '"' || peek() == '\'') {
                    char quote = peek();
                    ++pos;
                    while (!eof() && peek() != quote) value.push_back(src[pos++]);
                    if (!eof()) ++pos;
                } else {
                    while (!eof() && peek() != '>' &&
                           !std::isspace(static_cast<unsigned char>(peek()))) {
                        value.push_back(src[pos++]);
                    }
                }
            }
            node.attrs.emplace(std::move(name), decode_entities(value));
        }
        return false;
    }

    void read_raw_text(HtmlNode& node) {
        std::string close = "</" + node.tag;
        size_t end = pos;
        while (true) {
            end = src.find('<', end);
            if (end == std::string_view::npos) {
                end = src.size();
                break;
            }
            std::string_view rest = src.substr(end);
            if (rest.size() >= close.size() &&
                lower_ascii(rest.substr(0, close.size())) == close) {
                break;
            }
            ++end;
        }
        auto text = std::make_unique<HtmlNode>();
        text->kind = HtmlNode::Kind::text;
        text->text = std::string(src.substr(pos, end - pos));  // raw, no entities
        node.children.push_back(std::move(text));
        pos = end;
        if (!eof()) {
            pos += close.size();
            skip_to_gt();
        }
    }

    void skip_to_gt() {
        while (!eof() && peek() != '>') ++pos;
        if (!eof()) ++pos;
    }
};

}  // namespace

std::string HtmlNode::text_content() const {
    std::string out;
    walk([&](const HtmlNode& n) {
        if (n.kind == Kind::text) out += n.text;
        return true;
    });
    return out;
}

std::unique_ptr<HtmlNode> parse_html(std::string_view html) {
    auto root = std::make_unique<HtmlNode>();
    root->tag = "#root";
    Parser p{html};
    p.parse_into(*root);
    return root;
}

std::string decode_entities(std::string_view s) {
    static const std::unordered_map<std::string, std::string> named = {
        {"amp", "&"},  {"lt", "<"},    {"gt", ">"},   {"quot", "\""},
        {"apos", "'"}, {"nbsp", " "},  {"mdash", "\xE2\x80\x94"},
        {"ndash", "\xE2\x80\x93"},     {"hellip", "\xE2\x80\xA6"},
        {"copy", "\xC2\xA9"},          {"deg", "\xC2\xB0"},
        {"micro", "\xC2\xB5"},         {"middot", "\xC2\xB7"},
    };
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        size_t semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(s[i++]);
            continue;
        }
        std::string_view body = s.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            unsigned long cp = 0;
            bool ok = body.size() > 1;
            try {
                cp = (body[1] == 'x' || body[1] == 'X')
                         ? std::stoul(std::string(body.substr(2)), nullptr, 16)
                         : std::stoul(std::string(body.substr(1)), nullptr, 10);
            } catch (...) {
                ok = false;
            }
            if (ok) {
                append_utf8(out, cp);
                i = semi + 1;
                continue;
            }
        } else if (auto it = named.find(std::string(body)); it != named.end()) {
            out += it->second;
            i = semi + 1;
            continue;
        }
        out.push_back(s[i++]);
    }
    return out;
}

}  // namespace fairseek
