#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace springer {

/// Raised when text does not match the shared label grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position))
        , position_(position)
    {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A weakly decreasing sequence of positive integers. Zero parts are
/// dropped on construction, so equal partitions compare equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// Zero-padded access, 0-based.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    bool operator==(const Partition&) const = default;
    /// Lexicographic on the part sequence; the canonical enumeration order
    /// is descending in this order.
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct Block {
    int value;
    int multiplicity;
    bool operator==(const Block&) const = default;
};

/// (a_1^{m_1}, ..., a_h^{m_h}) with a_1 > ... > a_h > 0.
using BlockForm = std::vector<Block>;

std::int64_t n_invariant(const Partition& lambda);

/// All partitions of m in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int m);

/// Prefix-sum comparison. Throws std::invalid_argument on size mismatch.
bool dominance_leq(const Partition& mu, const Partition& lambda);

BlockForm blocks(const Partition& lambda);
Partition from_blocks(const BlockForm& form);

/// Index of the block containing 0-based row `row`, or blocks().size() for
/// rows past the last part.
std::size_t block_of_row(const BlockForm& form, std::size_t row);

/// True when every part is even; the empty partition counts as even.
bool is_even(const Partition& lambda);

/// Componentwise nu + 2 mu. Throws std::invalid_argument when the result is
/// not weakly decreasing.
Partition add_twice(const Partition& nu, const Partition& mu);

/// Partitions obtained by removing one corner box, in canonical order.
/// Throws std::invalid_argument for the empty partition.
std::vector<Partition> box_removals(const Partition& mu);

/// Dimension of the symmetric group irreducible labeled by mu (hook length
/// formula, exact). Throws std::overflow_error if it does not fit in 64 bits.
std::uint64_t hook_dimension(const Partition& mu);

Partition conjugate(const Partition& lambda);

/// `[4,2,2,1]`; `[]` for the empty partition.
std::string format_partition(const Partition& lambda);

/// Parses a partition starting at `pos`, advancing it past the closing
/// bracket. Used by the label parsers.
Partition parse_partition(std::string_view text, std::size_t& pos);
Partition parse_partition(std::string_view text);

}  // namespace springer
