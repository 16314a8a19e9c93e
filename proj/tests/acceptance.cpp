#include "springer/correspondence.hpp"
#include "springer/counting.hpp"
#include "springer/dims.hpp"
#include "springer/matrix_oracle.hpp"
#include "springer/restriction.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace springer;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Outcome appendix_tables()
{
    Outcome r;
    const std::size_t sizes[] = {5, 4, 13, 12, 32, 32};
    int matched = 0;
    for (int N = kAppendixMinN; N <= kAppendixMaxN; ++N) {
        const auto rep = verify_appendix(N);
        const std::size_t want = sizes[N - kAppendixMinN];
        r.require(rep.ok(), "table mismatch at N=" + std::to_string(N));
        r.require(rep.expected_rows == want && rep.computed_rows == want,
                  "row count at N=" + std::to_string(N));
        matched += rep.ok() ? 1 : 0;
    }
    if (r.ok)
        r.detail = std::to_string(matched) + "/6 tables match";
    return r;
}

Outcome cuspidal_counts()
{
    Outcome r;
    const std::int64_t listed[] = {1, 3, 3, 6, 7, 14, 16};
    for (int N = 1; N <= 7; ++N)
        r.require(static_cast<std::int64_t>(enumerate_cuspidal(N).size()) == listed[N - 1],
                  "enumeration at N=" + std::to_string(N));
    for (int N = 2; N <= 24; ++N)
        r.require(cuspidal_count(N) == static_cast<std::int64_t>(enumerate_cuspidal(N).size()),
                  "closed form at N=" + std::to_string(N));
    if (r.ok)
        r.detail = "N=1..7 listed counts, closed form for N=2..24";
    return r;
}

Outcome global_bijection()
{
    Outcome r;
    const std::int64_t totals[] = {5, 4, 13, 12, 32, 32};
    for (int N = 0; N <= 12; ++N) {
        const auto pairs = enumerate_pairs(N);
        std::set<PairLabel, PairLess> images;
        std::set<SeriesMembership, MembershipLess> labels;
        for (const auto& c : enumerate_series(N))
            for (const auto& mu : enumerate_partitions((N - c.N0) / 2)) {
                labels.insert({c, mu});
                images.insert(gamma(c, mu));
            }
        std::size_t fiber_total = 0;
        for (const auto& f : series_partition(N))
            fiber_total += f.members.size();
        const std::string at = " at N=" + std::to_string(N);
        r.require(images.size() == labels.size(), "gamma not injective" + at);
        r.require(images.size() == pairs.size(), "gamma not surjective" + at);
        r.require(fiber_total == pairs.size(), "fibers overlap" + at);
        const auto id = total_count_identity(N);
        r.require(id.holds(), "count identity" + at);
        if (N >= 2 && N <= 7)
            r.require(id.pairs == totals[N - 2], "pair count" + at);
    }
    if (r.ok)
        r.detail = "N=0..12";
    return r;
}

Outcome branching()
{
    Outcome r;
    std::size_t checked = 0;
    for (int N = 2; N <= 10; ++N)
        for (const auto& c : enumerate_series(N)) {
            const int a = (N - c.N0) / 2;
            if (a < 1)
                continue;
            for (const auto& mu : enumerate_partitions(a))
                for (const auto& mu_prime : enumerate_partitions(a - 1)) {
                    const auto b = branching_consistency(c, mu, mu_prime, N);
                    ++checked;
                    r.require(b.consistent(), "violation at " + format_datum(c) + " mu=" +
                                                  format_partition(mu) +
                                                  " mu'=" + format_partition(mu_prime));
                }
        }
    if (r.ok)
        r.detail = std::to_string(checked) + " (c, mu, mu') triples, 0 violations";
    return r;
}

Outcome matrix_oracle()
{
    Outcome r;
    std::size_t count = 0;
    for (int N = 1; N <= 8; ++N) {
        const auto ctx = form_matrix(N);
        for (const auto& o : enumerate_orbits(N)) {
            const std::string at = " for " + format_orbit(o);
            const auto x = nilpotent_representative(N, o.lambda, o.split);
            const std::int64_t n = n_invariant(o.lambda);
            r.require(is_self_adjoint(x, ctx), "not self-adjoint" + at);
            r.require(jordan_type(x) == o.lambda, "Jordan type" + at);
            r.require(centralizer_dims(x, ctx) == std::pair<std::int64_t, std::int64_t>{n, n + N},
                      "centralizer" + at);
            const auto nb = normal_basis(x, ctx);
            r.require(is_chain_basis(nb, x) &&
                          gram_matrix(nb, ctx) == expected_gram(nb.chain_lengths),
                      "normal basis" + at);
            ++count;
        }
    }
    if (r.ok)
        r.detail = std::to_string(count) + " orbit representatives, N=1..8";
    return r;
}

Outcome dimension_formulas()
{
    Outcome r;
    for (int N = 0; N <= 10; ++N) {
        const auto ctx = GroupContext::make(N);
        for (const auto& c : enumerate_series(N)) {
            const std::int64_t dim_O = orbit_dimension(ctx, unit_rep_orbit(c, N).orbit.lambda);
            const std::int64_t dim_OL = orbit_dimension(GroupContext::make(c.N0), c.nu.lambda);
            const std::string at = " at " + format_datum(c) + " N=" + std::to_string(N);
            r.require(d_O(N, c.N0, dim_O, dim_OL) == HalfInteger(0), "d_O" + at);
            r.require(dim_X_uni(N, c.N0, dim_OL) == ctx.dim_H - n_invariant(c.nu.lambda),
                      "dim X_uni" + at);
        }
    }
    const auto sweep = sweep_delta_Q(10000, 8, 2024, false);
    r.require(sweep.violations == 0, "Delta_Q bound violated");
    r.require(sweep.equalities > 0, "no equality instance found");
    if (r.ok)
        r.detail = "10000 signed permutations, " + std::to_string(sweep.equalities) +
                   " equality instances";
    return r;
}

Outcome round_trips()
{
    Outcome r;
    for (int N = 0; N <= 12; ++N) {
        for (const auto& p : enumerate_pairs(N)) {
            const auto m = cuspidal_support(p);
            r.require(gamma(m.datum, m.mu) == p, "gamma(support) at " + format_label(p));
            if (N <= 9)
                r.require(all_stripping_results(p).size() == 1,
                          "stripping order dependence at " + format_label(p));
        }
        for (const auto& c : enumerate_series(N))
            for (const auto& mu : enumerate_partitions((N - c.N0) / 2))
                r.require(cuspidal_support(gamma(c, mu)) == SeriesMembership{c, mu},
                          "support(gamma) at " + format_datum(c));
    }
    if (r.ok)
        r.detail = "round trips N<=12, order independence N<=9";
    return r;
}

struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const Criterion criteria[] = {
        {"appendix reproduction", 1.0, appendix_tables},
        {"cuspidal counts", 5.0, cuspidal_counts},
        {"global bijection", 10.0, global_bijection},
        {"branching consistency", 60.0, branching},
        {"matrix oracle", 120.0, matrix_oracle},
        {"dimension formulas", 10.0, dimension_formulas},
        {"round trips and order independence", 60.0, round_trips},
    };
    int failures = 0;
    int index = 1;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.ok && secs > c.limit_seconds) {
            out.ok = false;
            out.detail += " (over the " + std::to_string(c.limit_seconds) + " s limit)";
        }
        std::printf("%s %d %s: %s [%.3f s]\n", out.ok ? "PASS" : "FAIL", index, c.name,
                    out.detail.c_str(), secs);
        failures += out.ok ? 0 : 1;
        ++index;
    }
    return failures == 0 ? 0 : 1;
}
