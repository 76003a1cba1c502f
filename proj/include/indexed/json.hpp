#ifndef INDEXED_JSON_HPP
#define INDEXED_JSON_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "indexed/core.hpp"
#include "indexed/errors.hpp"
#include "indexed/predicate.hpp"

// JSON documents as a family indexed by node kind. A document (DOC) wraps a
// map; arrays and maps collect children through PredLists under JPred, which
// has no witness for DOC, so a document can only ever appear at the root.
namespace indexed::json {

enum class JTy { DOC, ARRAY, MAP, VALUE };

inline constexpr std::array<JTy, 4> all_jtys{JTy::DOC, JTy::ARRAY, JTy::MAP, JTy::VALUE};

constexpr std::string_view to_string(JTy t) noexcept {
    switch (t) {
        case JTy::DOC: return "DOC";
        case JTy::ARRAY: return "ARRAY";
        case JTy::MAP: return "MAP";
        case JTy::VALUE: return "VALUE";
    }
    return "?";
}

/// Which node kinds may sit inside an array or map.
struct JPred {
    enum class witness { JMapW, JArrW, JValW };
    static constexpr std::array<witness, 3> witnesses{witness::JMapW, witness::JArrW,
                                                      witness::JValW};

    static std::optional<witness> decide(JTy t) {
        switch (t) {
            case JTy::MAP: return witness::JMapW;
            case JTy::ARRAY: return witness::JArrW;
            case JTy::VALUE: return witness::JValW;
            case JTy::DOC: break;
        }
        return std::nullopt;
    }

    static bool holds(witness w, JTy t) {
        switch (w) {
            case witness::JMapW: return t == JTy::MAP;
            case witness::JArrW: return t == JTy::ARRAY;
            case witness::JValW: return t == JTy::VALUE;
        }
        return false;
    }
};

constexpr std::string_view to_string(JPred::witness w) noexcept {
    switch (w) {
        case JPred::witness::JMapW: return "JMapW";
        case JPred::witness::JArrW: return "JArrW";
        case JPred::witness::JValW: return "JValW";
    }
    return "?";
}

class root_not_map : public error {
public:
    explicit root_not_map(JTy actual)
        : error("document root must be a MAP, got " + std::string(to_string(actual))),
          actual_(actual) {}
    JTy actual() const noexcept { return actual_; }

private:
    JTy actual_;
};

class not_a_map : public error {
public:
    explicit not_a_map(JTy actual)
        : error("expected a MAP node, got " + std::string(to_string(actual))), actual_(actual) {}
    JTy actual() const noexcept { return actual_; }

private:
    JTy actual_;
};

class not_a_document : public error {
public:
    explicit not_a_document(JTy actual)
        : error("expected a DOC node, got " + std::string(to_string(actual))), actual_(actual) {}
    JTy actual() const noexcept { return actual_; }

private:
    JTy actual_;
};

class non_finite_number : public error {
public:
    non_finite_number() : error("JSON numbers must be finite") {}
};

class JsonDoc;

struct ArrayFamily {
    using index = JTy;
    using element = JsonDoc;
    static constexpr auto domain = all_jtys;
    static JTy index_of(const JsonDoc& d);
};

// A map entry is indexed by its value; the key plays no part.
struct MapFamily {
    using index = JTy;
    using element = std::pair<std::string, JsonDoc>;
    static constexpr auto domain = all_jtys;
    static JTy index_of(const element& entry);
};

using ArrayChildren = PredList<ArrayFamily, JPred>;
using MapEntries = PredList<MapFamily, JPred>;
using Entry = MapFamily::element;

struct JStr {
    std::string value;
    friend bool operator==(const JStr&, const JStr&) = default;
};
struct JNum {
    double value;
    friend bool operator==(const JNum&, const JNum&) = default;
};
struct JBool {
    bool value;
    friend bool operator==(const JBool&, const JBool&) = default;
};
struct JNull {
    friend bool operator==(const JNull&, const JNull&) = default;
};
struct JArray {
    ArrayChildren children;
};
struct JMap {
    MapEntries entries;
};

class JDoc {
public:
    const JsonDoc& body() const noexcept { return *body_; }

private:
    friend JsonDoc jdoc(JsonDoc root);
    explicit JDoc(std::shared_ptr<const JsonDoc> body) : body_(std::move(body)) {}

    std::shared_ptr<const JsonDoc> body_;
};

/// One JSON node of any kind. Built only through the factory functions
/// below, which enforce the root and child constraints.
class JsonDoc {
public:
    using Node = std::variant<JStr, JNum, JBool, JNull, JArray, JMap, JDoc>;

    JTy jty() const noexcept {
        switch (node_.index()) {
            case 4: return JTy::ARRAY;
            case 5: return JTy::MAP;
            case 6: return JTy::DOC;
            default: return JTy::VALUE;
        }
    }

    const Node& node() const noexcept { return node_; }

    template <class T>
    const T* get_if() const noexcept {
        return std::get_if<T>(&node_);
    }

    template <class Visitor>
    decltype(auto) visit(Visitor&& v) const {
        return std::visit(std::forward<Visitor>(v), node_);
    }

    friend bool operator==(const JsonDoc& a, const JsonDoc& b);

private:
    friend JsonDoc jstr(std::string);
    friend JsonDoc jnum(double);
    friend JsonDoc jbool(bool);
    friend JsonDoc jnull();
    friend JsonDoc jarray(ArrayChildren);
    friend JsonDoc jmap(MapEntries);
    friend JsonDoc jdoc(JsonDoc);

    explicit JsonDoc(Node n) : node_(std::move(n)) {}

    Node node_;
};

inline JTy ArrayFamily::index_of(const JsonDoc& d) { return d.jty(); }
inline JTy MapFamily::index_of(const element& entry) { return entry.second.jty(); }

inline bool operator==(const JArray& a, const JArray& b) { return a.children == b.children; }
inline bool operator==(const JMap& a, const JMap& b) { return a.entries == b.entries; }
inline bool operator==(const JDoc& a, const JDoc& b) { return a.body() == b.body(); }

inline bool operator==(const JsonDoc& a, const JsonDoc& b) { return a.node_ == b.node_; }

inline JTy jty_of(const JsonDoc& d) noexcept { return d.jty(); }

inline JsonDoc jstr(std::string s) { return JsonDoc(JStr{std::move(s)}); }

inline JsonDoc jnum(double v) {
    if (!std::isfinite(v)) throw non_finite_number();
    return JsonDoc(JNum{v});
}

inline JsonDoc jbool(bool b) { return JsonDoc(JBool{b}); }
inline JsonDoc jnull() { return JsonDoc(JNull{}); }

inline JsonDoc jarray(ArrayChildren children) { return JsonDoc(JArray{std::move(children)}); }

/// Array over children; a DOC child is rejected with its position.
inline JsonDoc jarray(const std::vector<JsonDoc>& children) {
    return jarray(ArrayChildren::from_elements(children));
}

inline JsonDoc jmap(MapEntries entries) { return JsonDoc(JMap{std::move(entries)}); }

/// Map over entries in the given order. Duplicate keys are kept.
inline JsonDoc jmap(const std::vector<Entry>& entries) {
    return jmap(MapEntries::from_elements(entries));
}

inline JsonDoc jdoc(JsonDoc root) {
    if (root.jty() != JTy::MAP) throw root_not_map(root.jty());
    return JsonDoc(JDoc(std::make_shared<const JsonDoc>(std::move(root))));
}

/// First entry with the given key, in insertion order.
inline std::optional<JsonDoc> get(const JsonDoc& m, std::string_view key) {
    const auto* map = m.get_if<JMap>();
    if (!map) throw not_a_map(m.jty());
    for (const auto& [k, v] : map->entries) {
        if (k == key) return v;
    }
    return std::nullopt;
}

/// Every constructor occurrence, the DOC wrapper included.
inline std::size_t count_nodes(const JsonDoc& d) {
    if (const auto* a = d.get_if<JArray>()) {
        std::size_t n = 1;
        for (const auto& c : a->children) n += count_nodes(c);
        return n;
    }
    if (const auto* m = d.get_if<JMap>()) {
        std::size_t n = 1;
        for (const auto& e : m->entries) n += count_nodes(e.second);
        return n;
    }
    if (const auto* doc = d.get_if<JDoc>()) return 1 + count_nodes(doc->body());
    return 1;
}

/// A leaf has depth 1; each enclosing node adds one.
inline std::size_t max_depth(const JsonDoc& d) {
    std::size_t deepest = 0;
    if (const auto* a = d.get_if<JArray>()) {
        for (const auto& c : a->children) deepest = std::max(deepest, max_depth(c));
    } else if (const auto* m = d.get_if<JMap>()) {
        for (const auto& e : m->entries) deepest = std::max(deepest, max_depth(e.second));
    } else if (const auto* doc = d.get_if<JDoc>()) {
        deepest = max_depth(doc->body());
    }
    return deepest + 1;
}

/// Node counts per kind, ordered as all_jtys.
struct JtyCounts {
    std::array<std::size_t, 4> counts{};

    std::size_t& operator[](JTy t) { return counts[static_cast<std::size_t>(t)]; }
    std::size_t operator[](JTy t) const { return counts[static_cast<std::size_t>(t)]; }
    std::size_t total() const {
        std::size_t n = 0;
        for (auto c : counts) n += c;
        return n;
    }
};

namespace detail {
inline void tally(const JsonDoc& d, JtyCounts& out) {
    ++out[d.jty()];
    if (const auto* a = d.get_if<JArray>()) {
        for (const auto& c : a->children) tally(c, out);
    } else if (const auto* m = d.get_if<JMap>()) {
        for (const auto& e : m->entries) tally(e.second, out);
    } else if (const auto* doc = d.get_if<JDoc>()) {
        tally(doc->body(), out);
    }
}
}  // namespace detail

inline JtyCounts count_by_jty(const JsonDoc& d) {
    JtyCounts out;
    detail::tally(d, out);
    return out;
}

}  // namespace indexed::json

#endif  // INDEXED_JSON_HPP
