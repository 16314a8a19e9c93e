#pragma once

#include <cstdint>
#include <vector>

namespace springer {

inline constexpr int kDefaultTruncation = 64;

/// Coefficients c_0..c_D of a truncated product, exact in 64 bits
/// (std::overflow_error otherwise).
using PowerSeries = std::vector<std::int64_t>;

/// prod_i (1 - t^i)^{-1}
PowerSeries partition_series(int degree = kDefaultTruncation);
/// prod_i (1 + t^i)^2
PowerSeries q1_series(int degree = kDefaultTruncation);
/// prod_i (1 + t^{2i})
PowerSeries q2_series(int degree = kDefaultTruncation);

/// Coefficient lookups; std::out_of_range past the truncation degree.
std::int64_t partition_count(int m);
std::int64_t q1(int m);
std::int64_t q2(int m);

/// Closed form for the number of cuspidal pairs, with the conventions
/// 2 for N = 0 and 1 for N = 1. Throws std::logic_error if the formula
/// does not yield an integer.
std::int64_t cuspidal_count(int N);

struct TotalCountReport {
    int N = 0;
    std::int64_t pairs = 0;           // |Psi_N| by enumeration
    std::int64_t series_sum = 0;      // sum_a p(a) |Psi^0_{N-2a}|
    std::vector<std::int64_t> terms;  // p(a) |Psi^0_{N-2a}| for a = 0, 1, ...
    bool holds() const { return pairs == series_sum; }
};

TotalCountReport total_count_identity(int N);

/// x' counts pairs whose partition is not even; x'' counts pairs whose
/// partition is even, each split orbit counted separately.
struct EvenSplitCounts {
    std::int64_t x_prime = 0;
    std::int64_t x_doubleprime = 0;
};

EvenSplitCounts even_split_counts(int N);

struct SplitIdentityReport {
    int N = 0;
    EvenSplitCounts counts;
    std::int64_t q1_sum = 0;  // sum_a p(a) q1(N - 2a)
    std::int64_t q2_sum = 0;  // sum_a p(a) q2(N - 2a)
    bool first_holds() const { return 2 * counts.x_prime + counts.x_doubleprime / 2 == q1_sum; }
    bool second_holds() const { return counts.x_doubleprime / 2 == q2_sum; }
    bool even_doubleprime() const { return counts.x_doubleprime % 2 == 0; }
};

SplitIdentityReport split_identities(int N);

}  // namespace springer
