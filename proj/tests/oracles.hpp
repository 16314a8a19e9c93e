#pragma once

// Brute-force reference computations used by the unit tests. They avoid the
// library's algorithms so that agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

/// Partitions of m via multiplicity vectors (m_1, ..., m_m) with sum k*m_k = m.
inline std::set<Parts> partitions(int m)
{
    std::set<Parts> out;
    std::vector<int> mult(static_cast<std::size_t>(m) + 1, 0);
    std::function<void(int, int)> go = [&](int k, int remaining) {
        if (k == 0) {
            if (remaining != 0)
                return;
            Parts p;
            for (int v = m; v >= 1; --v)
                for (int c = 0; c < mult[static_cast<std::size_t>(v)]; ++c)
                    p.push_back(v);
            out.insert(p);
            return;
        }
        for (int c = 0; c * k <= remaining; ++c) {
            mult[static_cast<std::size_t>(k)] = c;
            go(k - 1, remaining - c * k);
        }
        mult[static_cast<std::size_t>(k)] = 0;
    };
    go(m, m);
    return out;
}

/// Euler's pentagonal number recurrence.
inline std::vector<std::int64_t> partition_numbers(int max)
{
    std::vector<std::int64_t> p(static_cast<std::size_t>(max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max; ++n) {
        std::int64_t sum = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            sum += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                sum += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = sum;
    }
    return p;
}

/// Number of standard Young tableaux, by placing the largest entry in a corner.
inline std::uint64_t standard_tableaux(const Parts& shape)
{
    static std::map<Parts, std::uint64_t> memo;
    if (shape.empty())
        return 1;
    if (auto it = memo.find(shape); it != memo.end())
        return it->second;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i + 1 < shape.size() && shape[i + 1] == shape[i])
            continue;
        Parts smaller = shape;
        if (--smaller[i] == 0)
            smaller.pop_back();
        total += standard_tableaux(smaller);
    }
    memo[shape] = total;
    return total;
}

/// n(lambda) = sum over columns of binom(column length, 2).
inline std::int64_t n_by_columns(const Parts& p)
{
    std::int64_t n = 0;
    const int width = p.empty() ? 0 : p.front();
    for (int c = 1; c <= width; ++c) {
        std::int64_t len = 0;
        for (int x : p)
            len += x >= c ? 1 : 0;
        n += len * (len - 1) / 2;
    }
    return n;
}

/// Row-indexed sign sequence from one sign per distinct value.
inline std::vector<int> expand_signs(const Parts& p, const std::vector<int>& block_signs)
{
    std::vector<int> rows;
    std::size_t b = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0 && p[i] != p[i - 1])
            ++b;
        rows.push_back(block_signs[b]);
    }
    return rows;
}

/// Cuspidality read directly off the row definition.
inline bool cuspidal_rows(const Parts& p, const std::vector<int>& row_signs)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        const int next = i + 1 < p.size() ? p[i + 1] : 0;
        const int next_sign = i + 1 < p.size() ? row_signs[i + 1] : 1;
        if (p[i] - next > 2)
            return false;
        if (p[i] - next == 2 && row_signs[i] == next_sign)
            return false;
    }
    return true;
}

/// Coefficient of t^m in prod (1 + t^i)^2: ordered pairs of partitions into
/// distinct parts with total size m.
inline std::int64_t q1_brute(int m)
{
    std::vector<std::int64_t> distinct(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 0; k <= m; ++k)
        for (const auto& p : partitions(k))
            if (std::adjacent_find(p.begin(), p.end()) == p.end())
                ++distinct[static_cast<std::size_t>(k)];
    std::int64_t total = 0;
    for (int k = 0; k <= m; ++k)
        total += distinct[static_cast<std::size_t>(k)] * distinct[static_cast<std::size_t>(m - k)];
    return total;
}

/// Coefficient of t^m in prod (1 + t^{2i}): partitions into distinct even parts.
inline std::int64_t q2_brute(int m)
{
    std::int64_t total = 0;
    for (const auto& p : partitions(m))
        if (std::adjacent_find(p.begin(), p.end()) == p.end() &&
            std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; }))
            ++total;
    return total;
}

}  // namespace oracle
