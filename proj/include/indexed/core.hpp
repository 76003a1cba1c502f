#ifndef INDEXED_CORE_HPP
#define INDEXED_CORE_HPP

#include <concepts>
#include <cstddef>
#include <iterator>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include "indexed/detail/cons_list.hpp"
#include "indexed/errors.hpp"

namespace indexed {

// An indexed family groups element forms under a finite index domain.
// Every element names its own index through index_of; the domain is
// enumerable so predicates over it can be checked exhaustively.
//
//   struct Family {
//       using index = ...;     // equality comparable, to_string() via ADL
//       using element = ...;
//       static index index_of(const element&);
//       static constexpr std::array<index, N> domain{...};
//   };
template <class F>
concept IndexedFamily = requires(const typename F::element& e) {
    typename F::index;
    typename F::element;
    { F::index_of(e) } -> std::same_as<typename F::index>;
    requires std::ranges::range<decltype(F::domain)>;
} && std::equality_comparable<typename F::index>;

template <class I>
std::string index_name(const I& i) {
    using std::to_string;
    return std::string(to_string(i));
}

/// List over an indexed family that carries its index vector alongside the
/// elements. Every operation transforms the index vector the same way it
/// transforms the elements, so `indices()` always equals `index_of` mapped
/// over the elements.
///
/// Values are immutable; operations return new lists that share structure
/// with their inputs.
template <IndexedFamily F>
class DepList {
public:
    using family = F;
    using element = typename F::element;
    using index = typename F::index;

private:
    struct Cell {
        element value;
        index idx;
    };
    using Cells = detail::ConsList<Cell>;

public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = element;
        using difference_type = std::ptrdiff_t;
        using pointer = const element*;
        using reference = const element&;

        const_iterator() = default;

        reference operator*() const { return it_->value; }
        pointer operator->() const { return &it_->value; }
        const_iterator& operator++() {
            ++it_;
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++it_;
            return copy;
        }
        friend bool operator==(const const_iterator&, const const_iterator&) = default;

        const index& idx() const { return it_->idx; }

    private:
        friend class DepList;
        explicit const_iterator(typename Cells::const_iterator it) : it_(it) {}
        typename Cells::const_iterator it_;
    };

    DepList() = default;

    static DepList nil() { return DepList(); }

    template <std::ranges::input_range R>
        requires std::convertible_to<std::ranges::range_reference_t<R>, const element&>
    static DepList from_elements(R&& elems) {
        std::vector<Cell> cells;
        for (const element& e : elems) cells.push_back(Cell{e, F::index_of(e)});
        return DepList(Cells::from_range(cells.begin(), cells.end()));
    }

    /// Rebuild a list from (index, element) pairs, checking each stated index.
    template <std::ranges::input_range R>
    static DepList from_pairs(R&& pairs) {
        std::vector<Cell> cells;
        std::size_t pos = 0;
        for (const auto& [stated, e] : pairs) {
            index actual = F::index_of(e);
            if (!(actual == stated)) {
                throw index_mismatch(pos, index_name(stated), index_name(actual));
            }
            cells.push_back(Cell{e, actual});
            ++pos;
        }
        return DepList(Cells::from_range(cells.begin(), cells.end()));
    }

    [[nodiscard]] bool empty() const noexcept { return cells_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return cells_.size(); }

    const_iterator begin() const noexcept { return const_iterator(cells_.begin()); }
    const_iterator end() const noexcept { return const_iterator(cells_.end()); }

    [[nodiscard]] DepList cons(element e) const {
        index i = F::index_of(e);
        return DepList(cells_.cons(Cell{std::move(e), std::move(i)}));
    }

    const element& head() const {
        if (empty()) throw empty_list("head");
        return cells_.front().value;
    }

    [[nodiscard]] DepList tail() const {
        if (empty()) throw empty_list("tail");
        return DepList(cells_.rest());
    }

    [[nodiscard]] DepList take(std::size_t n) const { return DepList(cells_.take(n)); }
    [[nodiscard]] DepList drop(std::size_t n) const { return DepList(cells_.drop(n)); }

    [[nodiscard]] DepList append(const DepList& ys) const {
        return DepList(cells_.append(ys.cells_));
    }

    std::vector<index> indices() const {
        std::vector<index> out;
        out.reserve(size());
        for (const auto& c : cells_) out.push_back(c.idx);
        return out;
    }

    std::vector<element> elements() const { return {begin(), end()}; }

    std::vector<std::pair<index, element>> to_pairs() const {
        std::vector<std::pair<index, element>> out;
        out.reserve(size());
        for (const auto& c : cells_) out.emplace_back(c.idx, c.value);
        return out;
    }

    /// Recompute index_of at every position and compare with the carried
    /// index vector.
    [[nodiscard]] bool coherent() const {
        for (const auto& c : cells_) {
            if (!(F::index_of(c.value) == c.idx)) return false;
        }
        return true;
    }

    friend bool operator==(const DepList& a, const DepList& b) {
        if (a.size() != b.size()) return false;
        if (a.cells_.shares_storage_with(b.cells_)) return true;
        auto i = a.begin();
        for (auto j = b.begin(); j != b.end(); ++i, ++j) {
            if (!(*i == *j)) return false;
        }
        return true;
    }

private:
    explicit DepList(Cells cells) : cells_(std::move(cells)) {}

    Cells cells_;
};

// Free-function spellings of the list vocabulary.

template <IndexedFamily F>
DepList<F> nil() {
    return DepList<F>::nil();
}

template <IndexedFamily F>
DepList<F> cons(typename F::element e, const DepList<F>& rest) {
    return rest.cons(std::move(e));
}

template <IndexedFamily F>
const typename F::element& head(const DepList<F>& xs) {
    return xs.head();
}

template <IndexedFamily F>
DepList<F> tail(const DepList<F>& xs) {
    return xs.tail();
}

template <IndexedFamily F>
DepList<F> take(std::size_t n, const DepList<F>& xs) {
    return xs.take(n);
}

template <IndexedFamily F>
DepList<F> drop(std::size_t n, const DepList<F>& xs) {
    return xs.drop(n);
}

template <IndexedFamily F>
DepList<F> append(const DepList<F>& xs, const DepList<F>& ys) {
    return xs.append(ys);
}

template <IndexedFamily F>
std::vector<typename F::index> indices(const DepList<F>& xs) {
    return xs.indices();
}

template <IndexedFamily F>
std::vector<std::pair<typename F::index, typename F::element>> to_pairs(const DepList<F>& xs) {
    return xs.to_pairs();
}

template <IndexedFamily F, class R>
DepList<F> from_pairs(R&& pairs) {
    return DepList<F>::from_pairs(std::forward<R>(pairs));
}

}  // namespace indexed

#endif  // INDEXED_CORE_HPP
