#ifndef INDEXED_JSON_TEXT_HPP
#define INDEXED_JSON_TEXT_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "indexed/errors.hpp"
#include "indexed/json.hpp"

// RFC 8259 text <-> JsonDoc. Only objects are accepted as the top-level
// value, so parse() always yields a DOC node and serialize() only accepts one.
namespace indexed::json {

enum class ParseErrorKind { Syntax, RootNotObject, NumberOverflow, BadEscape, Trailing };

constexpr std::string_view to_string(ParseErrorKind k) noexcept {
    switch (k) {
        case ParseErrorKind::Syntax: return "Syntax";
        case ParseErrorKind::RootNotObject: return "RootNotObject";
        case ParseErrorKind::NumberOverflow: return "NumberOverflow";
        case ParseErrorKind::BadEscape: return "BadEscape";
        case ParseErrorKind::Trailing: return "Trailing";
    }
    return "?";
}

/// Where and why parsing stopped. offset is a byte offset in [0, input size];
/// line and column are 1-based, column counted in bytes.
struct ParseError {
    ParseErrorKind kind;
    std::size_t offset;
    std::size_t line;
    std::size_t column;
    std::string message;
};

class parse_error : public error {
public:
    explicit parse_error(ParseError detail)
        : error(std::string(to_string(detail.kind)) + " at " + std::to_string(detail.line) + ":" +
                std::to_string(detail.column) + ": " + detail.message),
          detail_(std::move(detail)) {}

    const ParseError& detail() const noexcept { return detail_; }
    ParseErrorKind kind() const noexcept { return detail_.kind; }

private:
    ParseError detail_;
};

inline constexpr std::size_t max_nesting = 512;

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view in) : in_(in) {}

    JsonDoc document() {
        skip_ws();
        if (at_end()) fail(ParseErrorKind::Syntax, pos_, "empty input");
        const std::size_t root_at = pos_;
        JsonDoc root = value();
        skip_ws();
        if (!at_end()) fail(ParseErrorKind::Trailing, pos_, "unexpected content after root value");
        if (root.jty() != JTy::MAP) {
            fail(ParseErrorKind::RootNotObject, root_at,
                 "root value must be an object, found " + describe(root));
        }
        return jdoc(std::move(root));
    }

private:
    [[noreturn]] void fail(ParseErrorKind kind, std::size_t at, std::string msg) const {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < at && i < in_.size(); ++i) {
            if (in_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw parse_error(ParseError{kind, at, line, col, std::move(msg)});
    }

    [[noreturn]] void unexpected() const {
        if (at_end()) fail(ParseErrorKind::Syntax, pos_, "unexpected end of input");
        const auto c = static_cast<unsigned char>(in_[pos_]);
        std::string shown;
        if (c >= 0x20 && c < 0x7f) {
            shown = std::string("'") + static_cast<char>(c) + "'";
        } else {
            static constexpr char hex[] = "0123456789abcdef";
            shown = std::string("byte 0x") + hex[c >> 4] + hex[c & 0xf];
        }
        fail(ParseErrorKind::Syntax, pos_, "unexpected " + shown);
    }

    static std::string describe(const JsonDoc& d) {
        if (d.get_if<JArray>()) return "array";
        if (d.get_if<JStr>()) return "string";
        if (d.get_if<JNum>()) return "number";
        if (d.get_if<JBool>()) return "boolean";
        return "null";
    }

    bool at_end() const noexcept { return pos_ >= in_.size(); }
    char peek() const noexcept { return in_[pos_]; }

    void skip_ws() {
        while (!at_end()) {
            char c = peek();
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
            ++pos_;
        }
    }

    void expect(char c) {
        if (at_end() || peek() != c) unexpected();
        ++pos_;
    }

    JsonDoc value() {
        if (at_end()) unexpected();
        switch (peek()) {
            case '{': return object();
            case '[': return array();
            case '"': return jstr(string());
            case 't': literal("true"); return jbool(true);
            case 'f': literal("false"); return jbool(false);
            case 'n': literal("null"); return jnull();
            default: break;
        }
        if (peek() == '-' || (peek() >= '0' && peek() <= '9')) return number();
        unexpected();
    }

    void literal(std::string_view word) {
        if (in_.substr(pos_, word.size()) != word) {
            fail(ParseErrorKind::Syntax, pos_, "invalid literal, expected " + std::string(word));
        }
        pos_ += word.size();
    }

    void enter() {
        if (++depth_ > max_nesting) {
            fail(ParseErrorKind::Syntax, pos_,
                 "nesting deeper than " + std::to_string(max_nesting) + " containers");
        }
    }

    JsonDoc object() {
        enter();
        ++pos_;  // '{'
        std::vector<Entry> entries;
        skip_ws();
        if (!at_end() && peek() == '}') {
            ++pos_;
        } else {
            for (;;) {
                skip_ws();
                if (at_end() || peek() != '"') unexpected();
                std::string key = string();
                skip_ws();
                expect(':');
                skip_ws();
                entries.emplace_back(std::move(key), value());
                skip_ws();
                if (at_end()) unexpected();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                expect('}');
                break;
            }
        }
        --depth_;
        return jmap(entries);
    }

    JsonDoc array() {
        enter();
        ++pos_;  // '['
        std::vector<JsonDoc> items;
        skip_ws();
        if (!at_end() && peek() == ']') {
            ++pos_;
        } else {
            for (;;) {
                skip_ws();
                items.push_back(value());
                skip_ws();
                if (at_end()) unexpected();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                expect(']');
                break;
            }
        }
        --depth_;
        return jarray(items);
    }

    int hex_digit(std::size_t at) const {
        if (at >= in_.size()) return -1;
        char c = in_[at];
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    }

    // Reads the four hex digits following "\u" at pos_.
    std::uint32_t hex4(std::size_t escape_at) {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            int d = hex_digit(pos_ + i);
            if (d < 0) fail(ParseErrorKind::BadEscape, escape_at, "\\u needs four hex digits");
            v = (v << 4) | static_cast<std::uint32_t>(d);
        }
        pos_ += 4;
        return v;
    }

    static void encode_utf8(std::uint32_t cp, std::string& out) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }

    void escape(std::string& out) {
        const std::size_t at = pos_;
        ++pos_;  // '\'
        if (at_end()) fail(ParseErrorKind::BadEscape, at, "unterminated escape");
        char c = in_[pos_++];
        switch (c) {
            case '"': out += '"'; return;
            case '\\': out += '\\'; return;
            case '/': out += '/'; return;
            case 'b': out += '\b'; return;
            case 'f': out += '\f'; return;
            case 'n': out += '\n'; return;
            case 'r': out += '\r'; return;
            case 't': out += '\t'; return;
            case 'u': break;
            default: fail(ParseErrorKind::BadEscape, at, "unknown escape");
        }
        std::uint32_t cp = hex4(at);
        if (cp >= 0xDC00 && cp <= 0xDFFF) fail(ParseErrorKind::BadEscape, at, "lone low surrogate");
        if (cp >= 0xD800 && cp <= 0xDBFF) {
            if (in_.substr(pos_, 2) != "\\u") {
                fail(ParseErrorKind::BadEscape, at, "high surrogate without low surrogate");
            }
            pos_ += 2;
            std::uint32_t lo = hex4(at);
            if (lo < 0xDC00 || lo > 0xDFFF) {
                fail(ParseErrorKind::BadEscape, at, "high surrogate without low surrogate");
            }
            cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
        }
        encode_utf8(cp, out);
    }

    // Copies one well-formed UTF-8 sequence starting at pos_.
    void utf8_sequence(std::string& out) {
        const std::size_t at = pos_;
        const auto b0 = static_cast<unsigned char>(in_[at]);
        std::size_t len = 0;
        unsigned char lo = 0x80, hi = 0xBF;
        if (b0 >= 0xC2 && b0 <= 0xDF) {
            len = 2;
        } else if (b0 >= 0xE0 && b0 <= 0xEF) {
            len = 3;
            if (b0 == 0xE0) lo = 0xA0;
            if (b0 == 0xED) hi = 0x9F;
        } else if (b0 >= 0xF0 && b0 <= 0xF4) {
            len = 4;
            if (b0 == 0xF0) lo = 0x90;
            if (b0 == 0xF4) hi = 0x8F;
        } else {
            fail(ParseErrorKind::Syntax, at, "invalid UTF-8");
        }
        if (at + len > in_.size()) fail(ParseErrorKind::Syntax, at, "truncated UTF-8 sequence");
        for (std::size_t i = 1; i < len; ++i) {
            const auto b = static_cast<unsigned char>(in_[at + i]);
            const unsigned char min = i == 1 ? lo : 0x80;
            const unsigned char max = i == 1 ? hi : 0xBF;
            if (b < min || b > max) fail(ParseErrorKind::Syntax, at, "invalid UTF-8");
        }
        out.append(in_.substr(at, len));
        pos_ += len;
    }

    std::string string() {
        const std::size_t open = pos_;
        ++pos_;  // '"'
        std::string out;
        for (;;) {
            if (at_end()) fail(ParseErrorKind::Syntax, open, "unterminated string");
            const auto c = static_cast<unsigned char>(peek());
            if (c == '"') {
                ++pos_;
                return out;
            }
            if (c == '\\') {
                escape(out);
            } else if (c < 0x20) {
                fail(ParseErrorKind::Syntax, pos_, "unescaped control character in string");
            } else if (c >= 0x80) {
                utf8_sequence(out);
            } else {
                out += static_cast<char>(c);
                ++pos_;
            }
        }
    }

    bool digit_at(std::size_t at) const {
        return at < in_.size() && in_[at] >= '0' && in_[at] <= '9';
    }

    JsonDoc number() {
        const std::size_t start = pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        if (!digit_at(pos_)) unexpected();

        // Decimal exponent of the leading significant digit, only needed to
        // tell overflow from underflow when from_chars reports out of range.
        long long lead = 0;
        bool seen_nonzero = false;
        const std::size_t int_start = pos_;
        if (peek() == '0') {
            ++pos_;
        } else {
            while (digit_at(pos_)) ++pos_;
            seen_nonzero = true;
            lead = static_cast<long long>(pos_ - int_start) - 1;
        }
        if (!at_end() && peek() == '.') {
            ++pos_;
            if (!digit_at(pos_)) unexpected();
            long long place = -1;
            while (digit_at(pos_)) {
                if (!seen_nonzero && in_[pos_] != '0') {
                    seen_nonzero = true;
                    lead = place;
                }
                --place;
                ++pos_;
            }
        }
        long long exponent = 0;
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            ++pos_;
            bool exp_negative = false;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                exp_negative = peek() == '-';
                ++pos_;
            }
            if (!digit_at(pos_)) unexpected();
            while (digit_at(pos_)) {
                if (exponent < 100000000) exponent = exponent * 10 + (in_[pos_] - '0');
                ++pos_;
            }
            if (exp_negative) exponent = -exponent;
        }

        const char* first = in_.data() + start;
        const char* last = in_.data() + pos_;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::result_out_of_range) {
            if (lead + exponent >= 0) {
                fail(ParseErrorKind::NumberOverflow, start,
                     "number out of double range: " + std::string(first, last));
            }
            v = negative ? -0.0 : 0.0;
        } else if (ec != std::errc() || ptr != last) {
            fail(ParseErrorKind::Syntax, start, "malformed number");
        }
        return jnum(v);
    }

    std::string_view in_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

inline void write_string(std::string_view s, std::string& out) {
    static constexpr char hex[] = "0123456789abcdef";
    out += '"';
    for (char ch : s) {
        const auto c = static_cast<unsigned char>(ch);
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    out += "\\u00";
                    out += hex[c >> 4];
                    out += hex[c & 0xf];
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

inline void write_number(double v, std::string& out) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

class Writer {
public:
    Writer(std::string& out, bool pretty) : out_(out), pretty_(pretty) {}

    void write(const JsonDoc& d, std::size_t level) {
        d.visit([&](const auto& n) { write_node(n, level); });
    }

private:
    void newline(std::size_t level) {
        if (!pretty_) return;
        out_ += '\n';
        out_.append(level * 2, ' ');
    }

    void write_node(const JStr& n, std::size_t) { write_string(n.value, out_); }
    void write_node(const JNum& n, std::size_t) { write_number(n.value, out_); }
    void write_node(const JBool& n, std::size_t) { out_ += n.value ? "true" : "false"; }
    void write_node(const JNull&, std::size_t) { out_ += "null"; }
    void write_node(const JDoc& n, std::size_t level) { write(n.body(), level); }

    void write_node(const JArray& n, std::size_t level) {
        out_ += '[';
        bool first = true;
        for (const auto& child : n.children) {
            if (!first) out_ += ',';
            first = false;
            newline(level + 1);
            write(child, level + 1);
        }
        if (!first) newline(level);
        out_ += ']';
    }

    void write_node(const JMap& n, std::size_t level) {
        out_ += '{';
        bool first = true;
        for (const auto& [key, value] : n.entries) {
            if (!first) out_ += ',';
            first = false;
            newline(level + 1);
            write_string(key, out_);
            out_ += pretty_ ? ": " : ":";
            write(value, level + 1);
        }
        if (!first) newline(level);
        out_ += '}';
    }

    std::string& out_;
    bool pretty_;
};

}  // namespace detail

/// Parse a complete JSON text whose top-level value is an object.
/// Throws parse_error.
inline JsonDoc parse(std::string_view text) { return detail::Parser(text).document(); }

enum class Layout { compact, pretty };

/// Compact output has no whitespace between tokens; pretty output puts each
/// member on its own line with two-space indentation. Throws not_a_document
/// for anything other than a DOC node.
inline std::string serialize(const JsonDoc& doc, Layout layout = Layout::compact) {
    if (doc.jty() != JTy::DOC) throw not_a_document(doc.jty());
    std::string out;
    detail::Writer(out, layout == Layout::pretty).write(doc, 0);
    return out;
}

/// Compact text for a node of any kind; for diagnostics.
inline std::string to_text(const JsonDoc& node) {
    std::string out;
    detail::Writer(out, false).write(node, 0);
    return out;
}

}  // namespace indexed::json

#endif  // INDEXED_JSON_TEXT_HPP
