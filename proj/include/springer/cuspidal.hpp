#pragma once

#include "springer/orbit.hpp"

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace springer {

/// A series datum (N0, nu, sigma) with (nu, sigma) cuspidal over N0.
struct CuspidalDatum {
    int N0 = 0;
    OrbitLabel nu;
    SignVector sigma;

    bool operator==(const CuspidalDatum&) const = default;

    PairLabel as_pair() const { return {nu, sigma}; }
    static CuspidalDatum from_pair(const PairLabel& p);
};

/// N0 ascending, then canonical pair order.
bool canonical_less(const CuspidalDatum& a, const CuspidalDatum& b);

struct DatumLess {
    bool operator()(const CuspidalDatum& a, const CuspidalDatum& b) const
    {
        return canonical_less(a, b);
    }
};

struct SeriesMembership {
    CuspidalDatum datum;
    Partition mu;

    bool operator==(const SeriesMembership&) const = default;
};

struct MembershipLess {
    bool operator()(const SeriesMembership& a, const SeriesMembership& b) const;
};

bool is_cuspidal(const PairLabel& p);

std::vector<PairLabel> enumerate_cuspidal(int N);

/// The series set C_N.
std::vector<CuspidalDatum> enumerate_series(int N);

/// lambda = nu + 2 mu with sigma carried row by row. Throws
/// std::invalid_argument if the sum is not a partition or two rows that end
/// up in one block carry different signs.
PairLabel gamma(const CuspidalDatum& c, const Partition& mu);

/// Greedy stripping: smallest admissible block, last row.
SeriesMembership cuspidal_support(const PairLabel& p);

/// Every result reachable by some admissible stripping order.
std::set<SeriesMembership, MembershipLess> all_stripping_results(const PairLabel& p);

struct SeriesFiber {
    CuspidalDatum datum;
    std::vector<PairLabel> members;
};

/// Fibers of cuspidal_support over C_N, in series order. Members keep the
/// pair enumeration order.
std::vector<SeriesFiber> series_partition(int N);

/// `N0=<int> nu=<orbit> sigma=<signs>`.
std::string format_datum(const CuspidalDatum& c);

/// Inverse of format_datum. Validates cuspidality.
CuspidalDatum parse_datum(std::string_view text);

}  // namespace springer
