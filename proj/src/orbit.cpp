#include "springer/orbit.hpp"

#include <algorithm>

namespace springer {

GroupContext GroupContext::make(int N)
{
    if (N < 0)
        throw std::invalid_argument("GroupContext: negative N");
    GroupContext ctx;
    ctx.N = N;
    ctx.n = N / 2;
    ctx.dim_H = static_cast<std::int64_t>(N) * (N - 1) / 2;
    const std::int64_t n = ctx.n;
    ctx.nu_H = (N % 2 == 1) ? n * n : n * n - n;
    return ctx;
}

bool needs_split(const Partition& lambda, int N)
{
    return N % 2 == 0 && is_even(lambda);
}

namespace {

int split_rank(Split s)
{
    switch (s) {
    case Split::none: return 0;
    case Split::plus: return 1;
    case Split::minus: return 2;
    }
    return 0;
}

// +1 sorts before -1.
bool signs_less(const SignVector& a, const SignVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](int x, int y) { return x > y; });
}

}  // namespace

bool canonical_less(const OrbitLabel& a, const OrbitLabel& b)
{
    if (a.lambda != b.lambda)
        return a.lambda > b.lambda;
    return split_rank(a.split) < split_rank(b.split);
}

bool canonical_less(const PairLabel& a, const PairLabel& b)
{
    if (!(a.orbit == b.orbit))
        return canonical_less(a.orbit, b.orbit);
    return signs_less(a.tau, b.tau);
}

std::vector<OrbitLabel> enumerate_orbits(int N)
{
    std::vector<OrbitLabel> out;
    for (auto& lambda : enumerate_partitions(N)) {
        if (needs_split(lambda, N)) {
            out.push_back({lambda, Split::plus});
            out.push_back({lambda, Split::minus});
        } else {
            out.push_back({lambda, Split::none});
        }
    }
    return out;
}

std::int64_t orbit_dimension(const GroupContext& ctx, const Partition& lambda)
{
    if (lambda.size() != ctx.N)
        throw std::invalid_argument("orbit_dimension: partition size differs from N");
    return ctx.dim_H - n_invariant(lambda);
}

ComponentGroups component_groups(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("component_groups: empty partition");
    ComponentGroups g;
    g.h = static_cast<int>(blocks(lambda).size());
    g.order_A_Gtheta = std::uint64_t{1} << g.h;
    g.order_A_H = is_even(lambda) ? g.order_A_Gtheta : g.order_A_Gtheta / 2;
    return g;
}

int largest_odd_block(const BlockForm& form)
{
    for (std::size_t b = 0; b < form.size(); ++b)
        if (form[b].value % 2 == 1)
            return static_cast<int>(b);
    return -1;
}

bool is_valid_sign_vector(const Partition& lambda, const SignVector& tau)
{
    const BlockForm form = blocks(lambda);
    if (tau.size() != form.size())
        return false;
    for (int s : tau)
        if (s != 1 && s != -1)
            return false;
    const int odd = largest_odd_block(form);
    return odd < 0 || tau[static_cast<std::size_t>(odd)] == 1;
}

std::vector<SignVector> valid_sign_vectors(const Partition& lambda)
{
    const BlockForm form = blocks(lambda);
    const std::size_t h = form.size();
    const int odd = largest_odd_block(form);
    std::vector<SignVector> out;
    // Bit k of the counter set means "-" at position h-1-k, so counting up
    // walks the lexicographic order with + first.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h); ++mask) {
        SignVector tau(h, 1);
        for (std::size_t k = 0; k < h; ++k)
            if (mask & (std::uint64_t{1} << k))
                tau[h - 1 - k] = -1;
        if (odd >= 0 && tau[static_cast<std::size_t>(odd)] != 1)
            continue;
        out.push_back(std::move(tau));
    }
    return out;
}

std::vector<PairLabel> enumerate_pairs(int N)
{
    std::vector<PairLabel> out;
    for (auto& orbit : enumerate_orbits(N))
        for (auto& tau : valid_sign_vectors(orbit.lambda))
            out.push_back({orbit, std::move(tau)});
    return out;
}

int row_sign(const Partition& lambda, const SignVector& tau, std::size_t row)
{
    const BlockForm form = blocks(lambda);
    const std::size_t b = block_of_row(form, row);
    return b < form.size() ? tau[b] : 1;
}

void validate(const PairLabel& p)
{
    const Partition& lambda = p.orbit.lambda;
    const bool want_split = needs_split(lambda, lambda.size());
    if (want_split && p.orbit.split == Split::none)
        throw std::invalid_argument("orbit " + format_partition(lambda) +
                                    " requires a split tag (+ or -)");
    if (!want_split && p.orbit.split != Split::none)
        throw std::invalid_argument("split tag is only allowed on even partitions of even N");
    const BlockForm form = blocks(lambda);
    if (p.tau.size() != form.size())
        throw std::invalid_argument("expected " + std::to_string(form.size()) +
                                    " signs (one per distinct part), got " +
                                    std::to_string(p.tau.size()));
    if (!is_valid_sign_vector(lambda, p.tau))
        throw std::invalid_argument("sign at the largest odd part must be +");
}

std::string format_signs(const SignVector& tau)
{
    std::string out;
    for (int s : tau)
        out += (s == 1) ? '+' : '-';
    return out;
}

std::string format_orbit(const OrbitLabel& orbit)
{
    std::string out = format_partition(orbit.lambda);
    if (orbit.split == Split::plus)
        out += '+';
    else if (orbit.split == Split::minus)
        out += '-';
    return out;
}

std::string format_label(const PairLabel& p)
{
    return format_orbit(p.orbit) + ";" + format_signs(p.tau);
}

SignVector parse_signs(std::string_view text, std::size_t& pos)
{
    SignVector tau;
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        tau.push_back(text[pos] == '+' ? 1 : -1);
        ++pos;
    }
    return tau;
}

OrbitLabel parse_orbit(std::string_view text, std::size_t& pos)
{
    OrbitLabel orbit;
    orbit.lambda = parse_partition(text, pos);
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        orbit.split = text[pos] == '+' ? Split::plus : Split::minus;
        ++pos;
    }
    return orbit;
}

OrbitLabel parse_orbit(std::string_view text)
{
    std::size_t pos = 0;
    OrbitLabel orbit = parse_orbit(text, pos);
    if (pos != text.size())
        throw ParseError("trailing characters after orbit", pos);
    const bool want = needs_split(orbit.lambda, orbit.lambda.size());
    if (want != (orbit.split != Split::none))
        throw std::invalid_argument(want ? "orbit requires a split tag"
                                         : "split tag not allowed on this orbit");
    return orbit;
}

PairLabel parse_label(std::string_view text)
{
    std::size_t pos = 0;
    PairLabel p;
    p.orbit = parse_orbit(text, pos);
    if (pos >= text.size() || text[pos] != ';')
        throw ParseError("expected ';'", pos);
    ++pos;
    const std::size_t sign_start = pos;
    p.tau = parse_signs(text, pos);
    if (pos != text.size())
        throw ParseError("expected '+' or '-'", pos);
    if (p.tau.empty() && !p.orbit.lambda.empty())
        throw ParseError("expected at least one sign", sign_start);
    validate(p);
    return p;
}

}  // namespace springer
