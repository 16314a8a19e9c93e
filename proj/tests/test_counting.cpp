#include "oracles.hpp"
#include "springer/counting.hpp"
#include "springer/cuspidal.hpp"

#include <doctest.h>

using namespace springer;

TEST_CASE("generating function coefficients")
{
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(10) == 42);
    CHECK(q1(3) == 6);
    CHECK(q1(6) == 22);
    CHECK(q2(6) == 2);
    CHECK(q2(4) == 1);
    CHECK_THROWS_AS(partition_count(kDefaultTruncation + 1), std::out_of_range);
    CHECK_THROWS_AS(q1(-1), std::out_of_range);

    const auto p = oracle::partition_numbers(kDefaultTruncation);
    for (int m = 0; m <= kDefaultTruncation; ++m)
        CHECK(partition_count(m) == p[static_cast<std::size_t>(m)]);
    for (int m = 0; m <= 16; ++m) {
        CHECK(q1(m) == oracle::q1_brute(m));
        CHECK(q2(m) == oracle::q2_brute(m));
    }
}

TEST_CASE("truncation stability")
{
    const auto p64 = partition_series();
    const auto a64 = q1_series();
    const auto b64 = q2_series();
    for (int D : {10, 24, 40}) {
        const auto p = partition_series(D);
        const auto a = q1_series(D);
        const auto b = q2_series(D);
        REQUIRE(p.size() == static_cast<std::size_t>(D + 1));
        for (int m = 0; m <= D; ++m) {
            const auto k = static_cast<std::size_t>(m);
            CHECK(p[k] == p64[k]);
            CHECK(a[k] == a64[k]);
            CHECK(b[k] == b64[k]);
        }
    }
}

TEST_CASE("cuspidal count closed form")
{
    CHECK(cuspidal_count(0) == 2);
    CHECK(cuspidal_count(1) == 1);
    CHECK(cuspidal_count(3) == 3);
    const std::vector<std::int64_t> appendix{1, 3, 3, 6, 7, 14, 16};
    for (int N = 1; N <= 7; ++N)
        CHECK(cuspidal_count(N) == appendix[static_cast<std::size_t>(N - 1)]);
    for (int N = 2; N <= 24; ++N)
        CHECK(cuspidal_count(N) == static_cast<std::int64_t>(enumerate_cuspidal(N).size()));
}

TEST_CASE("total count identity")
{
    const std::vector<std::int64_t> small{5, 4, 13, 12, 32, 32};
    for (int N = 2; N <= 7; ++N)
        CHECK(total_count_identity(N).pairs == small[static_cast<std::size_t>(N - 2)]);
    const auto six = total_count_identity(6);
    CHECK(six.terms == std::vector<std::int64_t>{14, 6, 6, 6});
    for (int N = 0; N <= 24; ++N)
        CHECK(total_count_identity(N).holds());
}

TEST_CASE("split identities")
{
    for (int N = 0; N <= 24; ++N) {
        const auto r = split_identities(N);
        CHECK(r.even_doubleprime());
        CHECK(r.first_holds());
        CHECK(r.second_holds());
        CHECK(r.counts.x_prime + r.counts.x_doubleprime ==
              static_cast<std::int64_t>(enumerate_pairs(N).size()));
        if (N % 2 == 1)
            CHECK(r.counts.x_doubleprime == 0);
    }
}
