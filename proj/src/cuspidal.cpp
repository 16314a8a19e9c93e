#include "springer/cuspidal.hpp"

#include <algorithm>
#include <map>

namespace springer {

CuspidalDatum CuspidalDatum::from_pair(const PairLabel& p)
{
    return {p.orbit.lambda.size(), p.orbit, p.tau};
}

bool canonical_less(const CuspidalDatum& a, const CuspidalDatum& b)
{
    if (a.N0 != b.N0)
        return a.N0 < b.N0;
    return canonical_less(a.as_pair(), b.as_pair());
}

bool MembershipLess::operator()(const SeriesMembership& a, const SeriesMembership& b) const
{
    if (!(a.datum == b.datum))
        return canonical_less(a.datum, b.datum);
    return a.mu > b.mu;
}

namespace {

// Row-level view of a pair: parts plus one sign per row.
struct RowState {
    std::vector<int> rows;
    std::vector<int> signs;

    auto operator<=>(const RowState&) const = default;
};

RowState to_rows(const PairLabel& p)
{
    RowState s;
    s.rows = p.orbit.lambda.parts();
    for (std::size_t r = 0; r < s.rows.size(); ++r)
        s.signs.push_back(row_sign(p.orbit.lambda, p.tau, r));
    return s;
}

int row_at(const RowState& s, std::size_t r) { return r < s.rows.size() ? s.rows[r] : 0; }
int sign_at(const RowState& s, std::size_t r) { return r < s.signs.size() ? s.signs[r] : 1; }

bool strip_admissible(const RowState& s, std::size_t r)
{
    const int gap = s.rows[r] - row_at(s, r + 1);
    return gap > 2 || (gap == 2 && s.signs[r] == sign_at(s, r + 1));
}

// Last rows of each block, top to bottom.
std::vector<std::size_t> block_ends(const RowState& s)
{
    std::vector<std::size_t> ends;
    for (std::size_t r = 0; r < s.rows.size(); ++r)
        if (r + 1 == s.rows.size() || s.rows[r + 1] != s.rows[r])
            ends.push_back(r);
    return ends;
}

RowState strip(RowState s, std::size_t r)
{
    s.rows[r] -= 2;
    if (s.rows[r] == 0) {
        s.rows.pop_back();
        s.signs.pop_back();
    }
    return s;
}

bool state_cuspidal(const RowState& s)
{
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        const int gap = s.rows[r] - row_at(s, r + 1);
        if (gap > 2)
            return false;
        if (gap == 2 && s.signs[r] == sign_at(s, r + 1))
            return false;
    }
    return true;
}

SignVector block_signs(const RowState& s)
{
    SignVector tau;
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        if (r == 0 || s.rows[r] != s.rows[r - 1])
            tau.push_back(s.signs[r]);
        else if (tau.back() != s.signs[r])
            throw std::invalid_argument("rows of equal length carry different signs");
    }
    return tau;
}

SeriesMembership finish(const PairLabel& p, const RowState& end)
{
    SeriesMembership m;
    m.datum.nu.lambda = Partition(end.rows);
    m.datum.N0 = m.datum.nu.lambda.size();
    m.datum.nu.split = p.orbit.split;
    m.datum.sigma = block_signs(end);
    std::vector<int> mu;
    for (std::size_t r = 0; r < p.orbit.lambda.length(); ++r)
        mu.push_back((p.orbit.lambda.part(r) - row_at(end, r)) / 2);
    m.mu = Partition(std::move(mu));
    return m;
}

}  // namespace

bool is_cuspidal(const PairLabel& p)
{
    return state_cuspidal(to_rows(p));
}

std::vector<PairLabel> enumerate_cuspidal(int N)
{
    std::vector<PairLabel> out;
    for (auto& p : enumerate_pairs(N))
        if (is_cuspidal(p))
            out.push_back(std::move(p));
    return out;
}

std::vector<CuspidalDatum> enumerate_series(int N)
{
    std::vector<CuspidalDatum> out;
    for (int N0 = N % 2; N0 <= N; N0 += 2)
        for (auto& p : enumerate_cuspidal(N0))
            out.push_back(CuspidalDatum::from_pair(p));
    return out;
}

PairLabel gamma(const CuspidalDatum& c, const Partition& mu)
{
    const Partition lambda = add_twice(c.nu.lambda, mu);
    RowState s;
    s.rows = lambda.parts();
    for (std::size_t r = 0; r < s.rows.size(); ++r)
        s.signs.push_back(row_sign(c.nu.lambda, c.sigma, r));
    PairLabel p;
    p.orbit.lambda = lambda;
    p.orbit.split = needs_split(lambda, lambda.size()) ? c.nu.split : Split::none;
    p.tau = block_signs(s);
    validate(p);
    return p;
}

SeriesMembership cuspidal_support(const PairLabel& p)
{
    RowState s = to_rows(p);
    while (true) {
        bool stripped = false;
        for (std::size_t r : block_ends(s)) {
            if (strip_admissible(s, r)) {
                s = strip(std::move(s), r);
                stripped = true;
                break;
            }
        }
        if (!stripped)
            break;
    }
    return finish(p, s);
}

std::set<SeriesMembership, MembershipLess> all_stripping_results(const PairLabel& p)
{
    using Results = std::set<SeriesMembership, MembershipLess>;
    std::map<RowState, Results> memo;

    auto explore = [&](auto& self, const RowState& s) -> Results {
        if (auto it = memo.find(s); it != memo.end())
            return it->second;
        Results out;
        bool any = false;
        for (std::size_t r : block_ends(s)) {
            if (!strip_admissible(s, r))
                continue;
            any = true;
            Results sub = self(self, strip(s, r));
            out.insert(sub.begin(), sub.end());
        }
        if (!any)
            out.insert(finish(p, s));
        memo.emplace(s, out);
        return out;
    };
    return explore(explore, to_rows(p));
}

std::vector<SeriesFiber> series_partition(int N)
{
    std::vector<SeriesFiber> fibers;
    for (auto& c : enumerate_series(N))
        fibers.push_back({c, {}});
    for (auto& p : enumerate_pairs(N)) {
        const SeriesMembership m = cuspidal_support(p);
        auto it = std::find_if(fibers.begin(), fibers.end(),
                               [&](const SeriesFiber& f) { return f.datum == m.datum; });
        if (it == fibers.end())
            throw std::logic_error("cuspidal support outside the series set: " + format_label(p));
        it->members.push_back(p);
    }
    return fibers;
}

std::string format_datum(const CuspidalDatum& c)
{
    return "N0=" + std::to_string(c.N0) + " nu=" + format_orbit(c.nu) +
           " sigma=" + format_signs(c.sigma);
}

CuspidalDatum parse_datum(std::string_view text)
{
    std::size_t pos = 0;
    auto expect = [&](std::string_view word) {
        if (text.substr(pos, word.size()) != word)
            throw ParseError("expected '" + std::string(word) + "'", pos);
        pos += word.size();
    };
    expect("N0=");
    const std::size_t num_start = pos;
    int N0 = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        N0 = N0 * 10 + (text[pos] - '0');
        if (N0 > 1'000'000)
            throw ParseError("N0 too large", num_start);
        ++pos;
    }
    if (pos == num_start)
        throw ParseError("expected an integer", pos);
    expect(" nu=");
    CuspidalDatum c;
    c.nu = parse_orbit(text, pos);
    expect(" sigma=");
    const std::size_t sign_start = pos;
    c.sigma = parse_signs(text, pos);
    if (pos != text.size())
        throw ParseError("trailing characters after series", pos);
    if (c.sigma.empty() && !c.nu.lambda.empty())
        throw ParseError("expected at least one sign", sign_start);
    c.N0 = N0;
    if (c.nu.lambda.size() != N0)
        throw std::invalid_argument("N0 differs from the size of nu");
    validate(c.as_pair());
    if (!is_cuspidal(c.as_pair()))
        throw std::invalid_argument("series datum is not cuspidal: " + format_label(c.as_pair()));
    return c;
}

}  // namespace springer
