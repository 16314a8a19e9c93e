#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace springer {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    constexpr HalfInteger(std::int64_t value) : twice_(2 * value) {}  // NOLINT(implicit)

    static constexpr HalfInteger from_twice(std::int64_t twice)
    {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b)
    {
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b)
    {
        return from_twice(a.twice_ - b.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger a) { return from_twice(-a.twice_); }

    /// Exact halving; the argument must have an even numerator.
    static HalfInteger half_of(HalfInteger a);

    constexpr auto operator<=>(const HalfInteger&) const = default;

    /// `3`, `-1/2`, `5/2`.
    std::string to_string() const
    {
        if (is_integer())
            return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    std::int64_t twice_ = 0;
};

inline HalfInteger HalfInteger::half_of(HalfInteger a)
{
    if (a.twice_ % 2 != 0)
        throw std::domain_error("HalfInteger::half_of: value is not in Z");
    return from_twice(a.twice_ / 2);
}

inline std::ostream& operator<<(std::ostream& os, HalfInteger h)
{
    return os << h.to_string();
}

}  // namespace springer
