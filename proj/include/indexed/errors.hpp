#ifndef INDEXED_ERRORS_HPP
#define INDEXED_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace indexed {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// head/tail on an empty list: the non-emptiness precondition failed.
class empty_list : public error {
public:
    explicit empty_list(const std::string& op) : error(op + ": list is empty") {}
};

/// from_pairs found a pair whose stated index disagrees with index_of.
class index_mismatch : public error {
public:
    index_mismatch(std::size_t position, std::string stated, std::string actual)
        : error("index mismatch at position " + std::to_string(position) + ": stated " +
                stated + ", element has " + actual),
          position_(position),
          stated_(std::move(stated)),
          actual_(std::move(actual)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& stated() const noexcept { return stated_; }
    const std::string& actual() const noexcept { return actual_; }

private:
    std::size_t position_;
    std::string stated_;
    std::string actual_;
};

/// Proof search failed: the element's index does not satisfy the predicate.
/// position is set when the failure happened while checking a whole sequence.
class predicate_violation : public error {
public:
    explicit predicate_violation(std::string index, std::optional<std::size_t> position = {})
        : error(describe(index, position)), index_(std::move(index)), position_(position) {}

    const std::string& index() const noexcept { return index_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    static std::string describe(const std::string& index, std::optional<std::size_t> position) {
        std::string msg = "predicate not satisfied by index " + index;
        if (position) msg += " at position " + std::to_string(*position);
        return msg;
    }

    std::string index_;
    std::optional<std::size_t> position_;
};

/// An explicitly supplied witness does not hold for the element's index.
class invalid_witness : public error {
public:
    explicit invalid_witness(std::string index)
        : error("witness does not hold for index " + index), index_(std::move(index)) {}

    const std::string& index() const noexcept { return index_; }

private:
    std::string index_;
};

}  // namespace indexed

#endif  // INDEXED_ERRORS_HPP
