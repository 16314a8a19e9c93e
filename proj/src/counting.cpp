#include "springer/counting.hpp"

#include "springer/cuspidal.hpp"

#include <stdexcept>
#include <string>

namespace springer {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("power series coefficient exceeds 64 bits");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("power series coefficient exceeds 64 bits");
    return r;
}

PowerSeries one(int degree)
{
    if (degree < 0)
        throw std::invalid_argument("negative truncation degree");
    PowerSeries s(static_cast<std::size_t>(degree) + 1, 0);
    s[0] = 1;
    return s;
}

// s *= (1 + t^k)
void times_one_plus(PowerSeries& s, int k)
{
    for (std::size_t d = s.size(); d-- > static_cast<std::size_t>(k);)
        s[d] = checked_add(s[d], s[d - static_cast<std::size_t>(k)]);
}

// s *= 1/(1 - t^k)
void times_geometric(PowerSeries& s, int k)
{
    for (std::size_t d = static_cast<std::size_t>(k); d < s.size(); ++d)
        s[d] = checked_add(s[d], s[d - static_cast<std::size_t>(k)]);
}

std::int64_t coefficient(const PowerSeries& s, int m)
{
    if (m < 0 || static_cast<std::size_t>(m) >= s.size())
        throw std::out_of_range("coefficient index " + std::to_string(m) +
                                " beyond truncation degree");
    return s[static_cast<std::size_t>(m)];
}

const PowerSeries& cached_p() { static const PowerSeries s = partition_series(); return s; }
const PowerSeries& cached_q1() { static const PowerSeries s = q1_series(); return s; }
const PowerSeries& cached_q2() { static const PowerSeries s = q2_series(); return s; }

}  // namespace

PowerSeries partition_series(int degree)
{
    PowerSeries s = one(degree);
    for (int k = 1; k <= degree; ++k)
        times_geometric(s, k);
    return s;
}

PowerSeries q1_series(int degree)
{
    PowerSeries s = one(degree);
    for (int k = 1; k <= degree; ++k) {
        times_one_plus(s, k);
        times_one_plus(s, k);
    }
    return s;
}

PowerSeries q2_series(int degree)
{
    PowerSeries s = one(degree);
    for (int k = 2; k <= degree; k += 2)
        times_one_plus(s, k);
    return s;
}

std::int64_t partition_count(int m) { return coefficient(cached_p(), m); }
std::int64_t q1(int m) { return coefficient(cached_q1(), m); }
std::int64_t q2(int m) { return coefficient(cached_q2(), m); }

std::int64_t cuspidal_count(int N)
{
    if (N < 0)
        throw std::invalid_argument("cuspidal_count: negative N");
    if (N == 0)
        return 2;
    if (N == 1)
        return 1;
    const std::int64_t twice =
        N % 2 == 1 ? q1(N) : checked_add(q1(N), checked_mul(3, q2(N)));
    if (twice % 2 != 0)
        throw std::logic_error("cuspidal_count: closed form is not an integer at N=" +
                               std::to_string(N));
    return twice / 2;
}

TotalCountReport total_count_identity(int N)
{
    TotalCountReport r;
    r.N = N;
    r.pairs = static_cast<std::int64_t>(enumerate_pairs(N).size());
    for (int a = 0; 2 * a <= N; ++a) {
        const auto cusp = static_cast<std::int64_t>(enumerate_cuspidal(N - 2 * a).size());
        r.terms.push_back(checked_mul(partition_count(a), cusp));
        r.series_sum = checked_add(r.series_sum, r.terms.back());
    }
    return r;
}

EvenSplitCounts even_split_counts(int N)
{
    EvenSplitCounts c;
    for (const auto& p : enumerate_pairs(N)) {
        if (is_even(p.orbit.lambda))
            ++c.x_doubleprime;
        else
            ++c.x_prime;
    }
    return c;
}

SplitIdentityReport split_identities(int N)
{
    SplitIdentityReport r;
    r.N = N;
    r.counts = even_split_counts(N);
    for (int a = 0; 2 * a <= N; ++a) {
        r.q1_sum = checked_add(r.q1_sum, checked_mul(partition_count(a), q1(N - 2 * a)));
        r.q2_sum = checked_add(r.q2_sum, checked_mul(partition_count(a), q2(N - 2 * a)));
    }
    return r;
}

}  // namespace springer
