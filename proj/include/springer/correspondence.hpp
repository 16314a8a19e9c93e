#pragma once

#include "springer/cuspidal.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace springer {

struct CorrespondenceRow {
    PairLabel pair;
    CuspidalDatum series;
    Partition mu;

    bool operator==(const CorrespondenceRow&) const = default;
};

/// Series in enumeration order, then mu in canonical partition order.
std::vector<CorrespondenceRow> correspondence_table(int N);

/// a = (N - N0)/2. Throws std::invalid_argument on a parity or range mismatch.
int series_rank(const CuspidalDatum& c, int N);

/// gamma(c, (a)).
PairLabel unit_rep_orbit(const CuspidalDatum& c, int N);

/// gamma(c, (1^a)).
PairLabel sign_rep_orbit(const CuspidalDatum& c, int N);

/// Jordan type nu + 2 mu with the split tag of nu.
OrbitLabel induced_orbit(const CuspidalDatum& c, const Partition& mu, int N);

/// `pair<TAB>series<TAB>mu`.
std::string format_row(const CorrespondenceRow& row);
CorrespondenceRow parse_row(std::string_view line);

/// Golden table text for N in 2..7; blank lines and `#` comments allowed.
std::string_view appendix_fixture(int N);
std::vector<CorrespondenceRow> parse_fixture(std::string_view text);

struct AppendixReport {
    int N = 0;
    std::size_t expected_rows = 0;
    std::size_t computed_rows = 0;
    std::vector<std::string> missing;     // in the fixture, not computed
    std::vector<std::string> unexpected;  // computed, not in the fixture

    bool ok() const { return missing.empty() && unexpected.empty(); }
};

AppendixReport compare_table(int N, const std::vector<CorrespondenceRow>& expected);
AppendixReport verify_appendix(int N);

inline constexpr int kAppendixMinN = 2;
inline constexpr int kAppendixMaxN = 7;

}  // namespace springer
