#include "springer/correspondence.hpp"

#include <algorithm>
#include <set>

namespace springer {

std::vector<CorrespondenceRow> correspondence_table(int N)
{
    std::vector<CorrespondenceRow> rows;
    for (const auto& c : enumerate_series(N)) {
        const int a = (N - c.N0) / 2;
        for (const auto& mu : enumerate_partitions(a))
            rows.push_back({gamma(c, mu), c, mu});
    }
    return rows;
}

int series_rank(const CuspidalDatum& c, int N)
{
    if (c.N0 > N || (N - c.N0) % 2 != 0)
        throw std::invalid_argument("series N0=" + std::to_string(c.N0) +
                                    " does not fit N=" + std::to_string(N));
    return (N - c.N0) / 2;
}

PairLabel unit_rep_orbit(const CuspidalDatum& c, int N)
{
    const int a = series_rank(c, N);
    return gamma(c, a == 0 ? Partition() : Partition{a});
}

PairLabel sign_rep_orbit(const CuspidalDatum& c, int N)
{
    const int a = series_rank(c, N);
    return gamma(c, Partition(std::vector<int>(static_cast<std::size_t>(a), 1)));
}

OrbitLabel induced_orbit(const CuspidalDatum& c, const Partition& mu, int N)
{
    if (mu.size() != series_rank(c, N))
        throw std::invalid_argument("mu has the wrong size for this series");
    OrbitLabel orbit;
    orbit.lambda = add_twice(c.nu.lambda, mu);
    orbit.split = needs_split(orbit.lambda, N) ? c.nu.split : Split::none;
    return orbit;
}

std::string format_row(const CorrespondenceRow& row)
{
    return format_label(row.pair) + "\t" + format_datum(row.series) + "\t" +
           format_partition(row.mu);
}

CorrespondenceRow parse_row(std::string_view line)
{
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos)
        throw ParseError("expected three tab-separated fields", line.size());
    CorrespondenceRow row;
    row.pair = parse_label(line.substr(0, t1));
    row.series = parse_datum(line.substr(t1 + 1, t2 - t1 - 1));
    row.mu = parse_partition(line.substr(t2 + 1));
    return row;
}

std::vector<CorrespondenceRow> parse_fixture(std::string_view text)
{
    std::vector<CorrespondenceRow> rows;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty() && line.front() != '#')
            rows.push_back(parse_row(line));
        start = end + 1;
    }
    return rows;
}

AppendixReport compare_table(int N, const std::vector<CorrespondenceRow>& expected)
{
    const auto computed = correspondence_table(N);
    std::set<std::string> want;
    std::set<std::string> have;
    for (const auto& r : expected)
        want.insert(format_row(r));
    for (const auto& r : computed)
        have.insert(format_row(r));

    AppendixReport report;
    report.N = N;
    report.expected_rows = expected.size();
    report.computed_rows = computed.size();
    std::set_difference(want.begin(), want.end(), have.begin(), have.end(),
                        std::back_inserter(report.missing));
    std::set_difference(have.begin(), have.end(), want.begin(), want.end(),
                        std::back_inserter(report.unexpected));
    if (want.size() != expected.size())
        report.missing.push_back("fixture contains duplicate rows");
    return report;
}

AppendixReport verify_appendix(int N)
{
    return compare_table(N, parse_fixture(appendix_fixture(N)));
}

}  // namespace springer
