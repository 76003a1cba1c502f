#ifndef INDEXED_PREDICATE_HPP
#define INDEXED_PREDICATE_HPP

#include <concepts>
#include <cstddef>
#include <optional>
#include <ranges>
#include <utility>
#include <vector>

#include "indexed/core.hpp"
#include "indexed/detail/cons_list.hpp"
#include "indexed/errors.hpp"
#include "indexed/non_empty.hpp"

namespace indexed {

// A decidable property of indices. decide() is the runtime stand-in for
// proof search; holds() checks a witness someone else produced. decide and
// holds must be pure.
//
// Sound:    decide(i) == w  implies  holds(*w, i)
// Complete: decide(i) empty implies  no w with holds(w, i)
template <class P, class I>
concept Predicate = requires(const I& i, const typename P::witness& w) {
    typename P::witness;
    { P::decide(i) } -> std::same_as<std::optional<typename P::witness>>;
    { P::holds(w, i) } -> std::same_as<bool>;
};

/// Predicates whose witnesses form a finite, listable set; completeness can
/// then be checked by enumeration.
template <class P, class I>
concept FinitePredicate = Predicate<P, I> && requires {
    requires std::ranges::range<decltype(P::witnesses)>;
};

/// DepList whose elements' indices all satisfy P, with one witness per
/// element kept in a parallel vector. Elements, indices and witnesses are
/// always the same length and move together.
template <IndexedFamily F, Predicate<typename F::index> P>
class PredList {
public:
    using family = F;
    using predicate = P;
    using element = typename F::element;
    using index = typename F::index;
    using witness = typename P::witness;
    using const_iterator = typename DepList<F>::const_iterator;

    PredList() = default;

    static PredList nil() { return PredList(); }

    /// Prepend e, finding its witness with P::decide.
    [[nodiscard]] PredList add(element e) const {
        index i = F::index_of(e);
        auto w = P::decide(i);
        if (!w) throw predicate_violation(index_name(i));
        return PredList(list_.cons(std::move(e)), witnesses_.cons(std::move(*w)));
    }

    /// Prepend e with a caller-supplied witness, which must hold for e's index.
    [[nodiscard]] PredList cons_with_witness(element e, witness w) const {
        index i = F::index_of(e);
        if (!P::holds(w, i)) throw invalid_witness(index_name(i));
        return PredList(list_.cons(std::move(e)), witnesses_.cons(std::move(w)));
    }

    /// Run decide over every index of xs. Fails at the first index without a
    /// witness.
    static PredList from_deplist(const DepList<F>& xs) {
        std::vector<witness> ws;
        ws.reserve(xs.size());
        std::size_t pos = 0;
        for (auto it = xs.begin(); it != xs.end(); ++it, ++pos) {
            auto w = P::decide(it.idx());
            if (!w) throw predicate_violation(index_name(it.idx()), pos);
            ws.push_back(std::move(*w));
        }
        return PredList(xs, Witnesses::from_range(ws.begin(), ws.end()));
    }

    template <std::ranges::input_range R>
    static PredList from_elements(R&& elems) {
        return from_deplist(DepList<F>::from_elements(std::forward<R>(elems)));
    }

    [[nodiscard]] bool empty() const noexcept { return list_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return list_.size(); }

    const_iterator begin() const noexcept { return list_.begin(); }
    const_iterator end() const noexcept { return list_.end(); }

    // One emptiness check covers all three vectors since they share a length.
    const element& head() const {
        if (empty()) throw empty_list("head");
        return list_.head();
    }

    [[nodiscard]] PredList tail() const {
        if (empty()) throw empty_list("tail");
        return PredList(list_.tail(), witnesses_.rest());
    }

    [[nodiscard]] PredList take(std::size_t n) const {
        return PredList(list_.take(n), witnesses_.take(n));
    }

    [[nodiscard]] PredList drop(std::size_t n) const {
        return PredList(list_.drop(n), witnesses_.drop(n));
    }

    [[nodiscard]] PredList append(const PredList& ys) const {
        return PredList(list_.append(ys.list_), witnesses_.append(ys.witnesses_));
    }

    /// The underlying DepList, witnesses dropped.
    const DepList<F>& forget() const noexcept { return list_; }

    std::vector<index> indices() const { return list_.indices(); }
    std::vector<element> elements() const { return list_.elements(); }
    std::vector<witness> witnesses() const { return {witnesses_.begin(), witnesses_.end()}; }

    /// Lengths agree, the index vector is coherent, and every witness holds.
    [[nodiscard]] bool coherent() const {
        if (witnesses_.size() != list_.size() || !list_.coherent()) return false;
        auto w = witnesses_.begin();
        for (auto it = list_.begin(); it != list_.end(); ++it, ++w) {
            if (!P::holds(*w, it.idx())) return false;
        }
        return true;
    }

    // Witnesses at equal positions prove the same index, so they never make
    // two lists with equal elements distinguishable.
    friend bool operator==(const PredList& a, const PredList& b) { return a.list_ == b.list_; }

private:
    using Witnesses = detail::ConsList<witness>;

    PredList(DepList<F> list, Witnesses ws) : list_(std::move(list)), witnesses_(std::move(ws)) {}

    DepList<F> list_;
    Witnesses witnesses_;
};

template <IndexedFamily F, Predicate<typename F::index> P>
PredList<F, P> pnil() {
    return PredList<F, P>::nil();
}

template <IndexedFamily F, class P>
PredList<F, P> add(typename F::element e, const PredList<F, P>& rest) {
    return rest.add(std::move(e));
}

template <IndexedFamily F, class P>
PredList<F, P> cons_with_witness(typename F::element e, typename P::witness w,
                                 const PredList<F, P>& rest) {
    return rest.cons_with_witness(std::move(e), std::move(w));
}

template <IndexedFamily F, class P>
const typename F::element& phead(const PredList<F, P>& xs) {
    return xs.head();
}

template <IndexedFamily F, class P>
PredList<F, P> ptail(const PredList<F, P>& xs) {
    return xs.tail();
}

template <IndexedFamily F, class P>
PredList<F, P> ptake(std::size_t n, const PredList<F, P>& xs) {
    return xs.take(n);
}

template <IndexedFamily F, class P>
PredList<F, P> pdrop(std::size_t n, const PredList<F, P>& xs) {
    return xs.drop(n);
}

template <IndexedFamily F, class P>
DepList<F> forget(const PredList<F, P>& xs) {
    return xs.forget();
}

template <class P, IndexedFamily F>
PredList<F, P> from_deplist(const DepList<F>& xs) {
    return PredList<F, P>::from_deplist(xs);
}

}  // namespace indexed

#endif  // INDEXED_PREDICATE_HPP
