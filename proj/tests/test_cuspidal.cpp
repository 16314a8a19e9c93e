#include "oracles.hpp"
#include "springer/counting.hpp"
#include "springer/cuspidal.hpp"

#include <doctest.h>

#include <map>

using namespace springer;

TEST_CASE("cuspidality examples")
{
    CHECK(is_cuspidal(parse_label("[2,1];++")));
    CHECK_FALSE(is_cuspidal(parse_label("[3];+")));
    CHECK(is_cuspidal(parse_label("[3,2];+-")));
    CHECK_FALSE(is_cuspidal(parse_label("[3,2];++")));
    CHECK(is_cuspidal(parse_label("[]+;")));
    CHECK(is_cuspidal(parse_label("[1];+")));
    CHECK_FALSE(is_cuspidal(parse_label("[2]+;+")));
    CHECK(is_cuspidal(parse_label("[2]+;-")));
}

TEST_CASE("cuspidality matches the row definition")
{
    for (int N = 0; N <= 12; ++N)
        for (const auto& p : enumerate_pairs(N)) {
            const auto rows = oracle::expand_signs(p.orbit.lambda.parts(), p.tau);
            CHECK(is_cuspidal(p) == oracle::cuspidal_rows(p.orbit.lambda.parts(), rows));
        }
}

TEST_CASE("cuspidal enumeration")
{
    CHECK(enumerate_cuspidal(5).size() == 7);
    CHECK(enumerate_cuspidal(6).size() == 14);
    const auto zero = enumerate_cuspidal(0);
    REQUIRE(zero.size() == 2);
    CHECK(zero[0] == parse_label("[]+;"));
    CHECK(zero[1] == parse_label("[]-;"));
    const std::vector<std::size_t> expected{2, 1, 3, 3, 6, 7, 14, 16};
    for (int N = 0; N <= 7; ++N)
        CHECK(enumerate_cuspidal(N).size() == expected[static_cast<std::size_t>(N)]);
}

TEST_CASE("series sets")
{
    const auto c3 = enumerate_series(3);
    REQUIRE(c3.size() == 4);
    CHECK(format_datum(c3[0]) == "N0=1 nu=[1] sigma=+");
    CHECK(enumerate_series(2).size() == 5);
    CHECK(enumerate_series(7).size() == 27);
    for (int N = 0; N <= 10; ++N) {
        const auto cs = enumerate_series(N);
        CHECK(std::is_sorted(cs.begin(), cs.end(), DatumLess{}));
    }
}

TEST_CASE("gamma examples")
{
    CHECK(gamma(parse_datum("N0=1 nu=[1] sigma=+"), Partition{2}) == parse_label("[5];+"));
    CHECK(gamma(parse_datum("N0=3 nu=[1,1,1] sigma=+"), Partition{1}) == parse_label("[3,1,1];++"));
    CHECK(gamma(parse_datum("N0=2 nu=[1,1] sigma=+"), Partition{1, 1}) == parse_label("[3,3];+"));
    CHECK(gamma(parse_datum("N0=0 nu=[]- sigma="), Partition{2, 1}) == parse_label("[4,2]-;++"));
    CHECK(gamma(parse_datum("N0=2 nu=[2]+ sigma=-"), Partition{1, 1}) == parse_label("[4,2]+;-+"));
}

TEST_CASE("gamma is defined for every mu (no counterexample up to N = 12)")
{
    for (int N = 0; N <= 12; ++N)
        for (const auto& c : enumerate_series(N))
            for (const auto& mu : enumerate_partitions((N - c.N0) / 2))
                CHECK_NOTHROW(gamma(c, mu));
}

TEST_CASE("cuspidal support examples")
{
    auto m = cuspidal_support(parse_label("[4,2,1];--+"));
    CHECK(format_datum(m.datum) == "N0=5 nu=[2,2,1] sigma=-+");
    CHECK(m.mu == Partition{1});
    m = cuspidal_support(parse_label("[5];+"));
    CHECK(format_datum(m.datum) == "N0=1 nu=[1] sigma=+");
    CHECK(m.mu == Partition{2});
    for (int N = 0; N <= 8; ++N)
        for (const auto& p : enumerate_cuspidal(N)) {
            const auto s = cuspidal_support(p);
            CHECK(s.datum.as_pair() == p);
            CHECK(s.mu.empty());
        }
}

TEST_CASE("round trips and parity")
{
    for (int N = 0; N <= 12; ++N) {
        for (const auto& p : enumerate_pairs(N)) {
            const auto m = cuspidal_support(p);
            CHECK(gamma(m.datum, m.mu) == p);
            for (std::size_t i = 0; i < p.orbit.lambda.length(); ++i) {
                const int diff = p.orbit.lambda.part(i) - m.datum.nu.lambda.part(i);
                CHECK(diff >= 0);
                CHECK(diff % 2 == 0);
            }
        }
        for (const auto& c : enumerate_series(N))
            for (const auto& mu : enumerate_partitions((N - c.N0) / 2))
                CHECK(cuspidal_support(gamma(c, mu)) == SeriesMembership{c, mu});
    }
}

TEST_CASE("stripping order independence")
{
    for (int N = 0; N <= 9; ++N)
        for (const auto& p : enumerate_pairs(N)) {
            const auto all = all_stripping_results(p);
            REQUIRE(all.size() == 1);
            CHECK(*all.begin() == cuspidal_support(p));
        }
}

TEST_CASE("series partition")
{
    for (int N = 0; N <= 12; ++N) {
        const auto fibers = series_partition(N);
        std::set<PairLabel, PairLess> seen;
        std::size_t total = 0;
        for (const auto& f : fibers) {
            const int a = (N - f.datum.N0) / 2;
            CHECK(static_cast<std::int64_t>(f.members.size()) == partition_count(a));
            for (const auto& p : f.members)
                CHECK(seen.insert(p).second);
            total += f.members.size();
        }
        CHECK(total == enumerate_pairs(N).size());
    }
    std::vector<std::size_t> sizes;
    for (const auto& f : series_partition(3))
        sizes.push_back(f.members.size());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 1});
    const auto five = series_partition(5);
    CHECK(five.front().members.size() == 2);
    std::size_t seven = 0;
    for (const auto& f : series_partition(7))
        seven += f.members.size();
    CHECK(seven == 32);
}

TEST_CASE("series text form")
{
    const auto c = parse_datum("N0=5 nu=[2,2,1] sigma=-+");
    CHECK(c.N0 == 5);
    CHECK(format_datum(c) == "N0=5 nu=[2,2,1] sigma=-+");
    CHECK(format_datum(parse_datum("N0=0 nu=[]+ sigma=")) == "N0=0 nu=[]+ sigma=");
    CHECK_THROWS_AS(parse_datum("N0=1 nu=[3] sigma=+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_datum("N0=2 nu=[1] sigma=+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_datum("N0=1 nu=[1]"), ParseError);
    CHECK_THROWS_AS(parse_datum("N0= nu=[1] sigma=+"), ParseError);
}
