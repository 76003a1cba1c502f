#ifndef INDEXED_DETAIL_CONS_LIST_HPP
#define INDEXED_DETAIL_CONS_LIST_HPP

#include <cstddef>
#include <iterator>
#include <memory>
#include <utility>
#include <vector>

namespace indexed::detail {

// Persistent singly-linked list. Nodes are immutable once published and
// shared between lists, so tail/drop are O(1) and never copy; take/append
// copy only the prefix they rebuild.
template <class T>
class ConsList {
    struct Node {
        T value;
        std::shared_ptr<Node> next;
        std::size_t size;
    };

public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = T;
        using difference_type = std::ptrdiff_t;
        using pointer = const T*;
        using reference = const T&;

        const_iterator() = default;

        reference operator*() const { return node_->value; }
        pointer operator->() const { return &node_->value; }

        const_iterator& operator++() {
            node_ = node_->next.get();
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }

        friend bool operator==(const const_iterator&, const const_iterator&) = default;

    private:
        friend class ConsList;
        explicit const_iterator(const Node* n) : node_(n) {}
        const Node* node_ = nullptr;
    };

    ConsList() = default;
    ConsList(const ConsList&) = default;
    ConsList(ConsList&&) noexcept = default;
    ConsList& operator=(const ConsList&) = default;
    ConsList& operator=(ConsList&&) noexcept = default;

    // Unlink uniquely-owned nodes iteratively; the default recursive
    // shared_ptr teardown overflows the stack on long lists.
    ~ConsList() {
        auto n = std::move(head_);
        while (n && n.use_count() == 1) {
            n = std::move(n->next);
        }
    }

    template <class It>
    static ConsList from_range(It first, It last) {
        std::vector<It> its;
        for (; first != last; ++first) its.push_back(first);
        ConsList out;
        for (auto it = its.rbegin(); it != its.rend(); ++it) out = out.cons(**it);
        return out;
    }

    [[nodiscard]] bool empty() const noexcept { return head_ == nullptr; }
    [[nodiscard]] std::size_t size() const noexcept { return head_ ? head_->size : 0; }

    const_iterator begin() const noexcept { return const_iterator(head_.get()); }
    const_iterator end() const noexcept { return const_iterator(); }

    // Precondition: !empty().
    const T& front() const { return head_->value; }

    [[nodiscard]] ConsList cons(T value) const {
        auto n = std::make_shared<Node>(Node{std::move(value), head_, size() + 1});
        return ConsList(std::move(n));
    }

    // Precondition: !empty().
    [[nodiscard]] ConsList rest() const { return ConsList(head_->next); }

    [[nodiscard]] ConsList drop(std::size_t n) const {
        auto cur = head_;
        for (; n > 0 && cur; --n) cur = cur->next;
        return ConsList(std::move(cur));
    }

    [[nodiscard]] ConsList take(std::size_t n) const {
        if (n >= size()) return *this;
        std::vector<const T*> prefix;
        prefix.reserve(n);
        for (const Node* cur = head_.get(); prefix.size() < n; cur = cur->next.get()) {
            prefix.push_back(&cur->value);
        }
        ConsList out;
        for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) out = out.cons(**it);
        return out;
    }

    [[nodiscard]] ConsList append(const ConsList& tail) const {
        if (tail.empty()) return *this;
        std::vector<const T*> prefix;
        prefix.reserve(size());
        for (const auto& v : *this) prefix.push_back(&v);
        ConsList out = tail;
        for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) out = out.cons(**it);
        return out;
    }

    // Whether both lists are literally the same chain of nodes.
    [[nodiscard]] bool shares_storage_with(const ConsList& other) const noexcept {
        return head_ == other.head_;
    }

private:
    explicit ConsList(std::shared_ptr<Node> head) : head_(std::move(head)) {}

    std::shared_ptr<Node> head_;
};

}  // namespace indexed::detail

#endif  // INDEXED_DETAIL_CONS_LIST_HPP
