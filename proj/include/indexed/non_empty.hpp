#ifndef INDEXED_NON_EMPTY_HPP
#define INDEXED_NON_EMPTY_HPP

#include <optional>
#include <utility>

namespace indexed {

/// Evidence that a particular list has at least one element. The only way to
/// obtain one is `non_empty(xs)`, so head/tail through it cannot fail.
template <class List>
class NonEmpty {
public:
    static std::optional<NonEmpty> of(const List& xs) {
        if (xs.empty()) return std::nullopt;
        return NonEmpty(xs);
    }

    const List& list() const noexcept { return list_; }

    decltype(auto) head() const { return list_.head(); }
    List tail() const { return list_.tail(); }

private:
    explicit NonEmpty(List xs) : list_(std::move(xs)) {}

    List list_;
};

template <class List>
std::optional<NonEmpty<List>> non_empty(const List& xs) {
    return NonEmpty<List>::of(xs);
}

template <class List>
decltype(auto) head(const NonEmpty<List>& ok) {
    return ok.head();
}

template <class List>
List tail(const NonEmpty<List>& ok) {
    return ok.tail();
}

}  // namespace indexed

#endif  // INDEXED_NON_EMPTY_HPP
