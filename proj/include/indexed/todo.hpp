#ifndef INDEXED_TODO_HPP
#define INDEXED_TODO_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "indexed/core.hpp"
#include "indexed/predicate.hpp"

// Reference family: TODO items indexed by their status.
namespace indexed::todo {

enum class Status { TODO, STARTED, DONE };

inline constexpr std::array<Status, 3> all_statuses{Status::TODO, Status::STARTED, Status::DONE};

constexpr std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::TODO: return "TODO";
        case Status::STARTED: return "STARTED";
        case Status::DONE: return "DONE";
    }
    return "?";
}

struct Item {
    Status state;
    std::string title;

    friend bool operator==(const Item&, const Item&) = default;
};

inline Item make_item(Status state, std::string title) { return Item{state, std::move(title)}; }

struct ItemFamily {
    using index = Status;
    using element = Item;
    static constexpr auto domain = all_statuses;
    static Status index_of(const Item& item) { return item.state; }
};

/// Satisfied only by DONE; its single witness is IsDone.
struct IsComplete {
    enum class witness { IsDone };
    static constexpr std::array<witness, 1> witnesses{witness::IsDone};

    static std::optional<witness> decide(Status s) {
        if (s == Status::DONE) return witness::IsDone;
        return std::nullopt;
    }
    static bool holds(witness w, Status s) { return w == witness::IsDone && s == Status::DONE; }
};

constexpr std::string_view to_string(IsComplete::witness) noexcept { return "IsDone"; }

using Items = DepList<ItemFamily>;
using CompletedItems = PredList<ItemFamily, IsComplete>;

}  // namespace indexed::todo

#endif  // INDEXED_TODO_HPP
