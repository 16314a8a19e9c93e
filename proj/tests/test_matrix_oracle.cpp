#include "springer/matrix_oracle.hpp"

#include <doctest.h>

using namespace springer;

namespace {

std::vector<OrbitLabel> orbits_up_to(int max_n)
{
    std::vector<OrbitLabel> all;
    for (int N = 1; N <= max_n; ++N)
        for (auto& o : enumerate_orbits(N))
            all.push_back(std::move(o));
    return all;
}

RationalMatrix unit(int N, std::size_t r, std::size_t c)
{
    RationalMatrix m(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    m(r, c) = 1;
    return m;
}

}  // namespace

TEST_CASE("form matrix")
{
    const auto c2 = form_matrix(2);
    CHECK(c2.J == unit(2, 0, 1) + unit(2, 1, 0));
    const auto c3 = form_matrix(3);
    CHECK(c3.J == unit(3, 0, 0) + unit(3, 1, 2) + unit(3, 2, 1));
    for (int N = 1; N <= 10; ++N) {
        const auto ctx = form_matrix(N);
        CHECK(ctx.J * ctx.J == RationalMatrix::identity(static_cast<std::size_t>(N)));
        CHECK(ctx.J.transpose() == ctx.J);
    }
}

TEST_CASE("adjoint")
{
    const auto ctx = form_matrix(2);
    CHECK(is_self_adjoint(RationalMatrix(2, 2), ctx));
    CHECK(is_self_adjoint(nilpotent_representative(2, Partition{2}, Split::plus), ctx));
    CHECK_FALSE(is_self_adjoint(unit(2, 0, 0), ctx));
    const auto c5 = form_matrix(5);
    const auto x = unit(5, 0, 3) + unit(5, 2, 4);
    CHECK(adjoint(adjoint(x, c5), c5) == x);
}

TEST_CASE("representative examples")
{
    const auto c2 = form_matrix(2);
    const auto x2 = nilpotent_representative(2, Partition{2}, Split::plus);
    CHECK(x2 == unit(2, c2.e(1), c2.f(1)));

    const auto c3 = form_matrix(3);
    const auto x3 = nilpotent_representative(3, Partition{3}, Split::none);
    CHECK(jordan_type(x3) == Partition{3});
    RationalMatrix f1(3, 1);
    f1(c3.f(1), 0) = 1;
    const auto y = x3 * f1;
    CHECK(y(c3.e(0), 0) != 0);
    const auto z = x3 * y;
    CHECK(z(c3.e(1), 0) != 0);
    CHECK((x3 * z).is_zero());

    const auto x4 = nilpotent_representative(4, Partition{2, 2}, Split::plus);
    const auto c4 = form_matrix(4);
    CHECK(x4 == unit(4, c4.e(1), c4.f(1)) + unit(4, c4.e(2), c4.f(2)));

    CHECK_THROWS_AS(nilpotent_representative(4, Partition{2, 2}, Split::none),
                    std::invalid_argument);
    CHECK_THROWS_AS(nilpotent_representative(3, Partition{2, 1}, Split::plus),
                    std::invalid_argument);
    CHECK_THROWS_AS(nilpotent_representative(4, Partition{3}, Split::none),
                    std::invalid_argument);
}

TEST_CASE("Jordan type")
{
    CHECK(jordan_type(RationalMatrix(3, 3)) == Partition{1, 1, 1});
    CHECK_THROWS_AS(jordan_type(RationalMatrix::identity(2)), std::domain_error);
}

TEST_CASE("centralizer examples")
{
    const auto c3 = form_matrix(3);
    CHECK(centralizer_dims(nilpotent_representative(3, Partition{2, 1}, Split::none), c3) ==
          std::pair<std::int64_t, std::int64_t>{1, 4});
    for (int N = 1; N <= 6; ++N) {
        const auto ctx = form_matrix(N);
        const std::int64_t n0 = static_cast<std::int64_t>(N) * (N - 1) / 2;
        CHECK(centralizer_dims(RationalMatrix(static_cast<std::size_t>(N),
                                              static_cast<std::size_t>(N)),
                               ctx) == std::pair<std::int64_t, std::int64_t>{n0, n0 + N});
    }
}

TEST_CASE("representatives up to N = 8")
{
    for (const auto& o : orbits_up_to(8)) {
        const int N = o.lambda.size();
        CAPTURE(format_orbit(o));
        const auto ctx = form_matrix(N);
        const auto x = nilpotent_representative(N, o.lambda, o.split);
        CHECK(is_self_adjoint(x, ctx));
        CHECK(jordan_type(x) == o.lambda);
        const std::int64_t n = n_invariant(o.lambda);
        const auto dims = centralizer_dims(x, ctx);
        CHECK(dims == std::pair<std::int64_t, std::int64_t>{n, n + N});
        const auto g = GroupContext::make(N);
        CHECK(dims.first + orbit_dimension(g, o.lambda) == g.dim_H);
    }
}

TEST_CASE("normal bases")
{
    const auto zero = normal_basis(RationalMatrix(2, 2), form_matrix(2));
    CHECK(zero.chain_lengths == std::vector<int>{1, 1});

    for (const auto& o : orbits_up_to(8)) {
        const int N = o.lambda.size();
        CAPTURE(format_orbit(o));
        const auto ctx = form_matrix(N);
        const auto x = nilpotent_representative(N, o.lambda, o.split);
        const auto nb = normal_basis(x, ctx);
        CHECK(nb.chain_lengths == o.lambda.parts());
        CHECK(is_chain_basis(nb, x));
        CHECK(gram_matrix(nb, ctx) == expected_gram(nb.chain_lengths));
    }
}

TEST_CASE("top forms are non-degenerate")
{
    for (const auto& o : orbits_up_to(6)) {
        const int N = o.lambda.size();
        const auto ctx = form_matrix(N);
        const auto x = nilpotent_representative(N, o.lambda, o.split);
        const auto dets = top_form_determinants(normal_basis(x, ctx), x, ctx);
        CHECK(dets.size() == blocks(o.lambda).size());
        for (const auto& d : dets)
            CHECK_FALSE(d.is_zero());
    }
}

TEST_CASE("random H elements")
{
    for (int N = 1; N <= 7; ++N)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto ctx = form_matrix(N);
            const auto g = random_h_element(N, seed);
            CHECK(g.transpose() * ctx.J * g == ctx.J);
            CHECK(determinant(g) == Rational(1));
        }
    CHECK(random_h_element(5, 3) == random_h_element(5, 3));
}

TEST_CASE("conjugation invariance")
{
    std::uint64_t seed = 100;
    for (const auto& o : orbits_up_to(6)) {
        const int N = o.lambda.size();
        const auto ctx = form_matrix(N);
        const auto x = nilpotent_representative(N, o.lambda, o.split);
        const auto y = conjugate_by(random_h_element(N, seed++), x);
        CHECK(is_self_adjoint(y, ctx));
        CHECK(jordan_type(y) == o.lambda);
        const auto nb = normal_basis(y, ctx);
        CHECK(is_chain_basis(nb, y));
        CHECK(gram_matrix(nb, ctx) == expected_gram(nb.chain_lengths));
    }
}

TEST_CASE("split orbits")
{
    for (int N = 2; N <= 8; N += 2) {
        const auto ctx = form_matrix(N);
        const auto tn = t_n(ctx);
        CHECK(tn * tn == RationalMatrix::identity(static_cast<std::size_t>(N)));
        CHECK(tn.transpose() * ctx.J * tn == ctx.J);
        CHECK(determinant(tn) == Rational(-1));
        const auto plus = nilpotent_representative(N, Partition{N}, Split::plus);
        const auto minus = nilpotent_representative(N, Partition{N}, Split::minus);
        CHECK(conjugate_by(tn, plus) == minus);
        CHECK_FALSE(plus == minus);
        for (std::uint64_t seed = 0; seed < 60; ++seed)
            CHECK_FALSE(conjugate_by(random_h_element(N, seed), plus) == minus);
    }
}

TEST_CASE("exact helpers")
{
    CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
    const auto r = gaussian_sqrt(GaussianRational(Rational(0), Rational(2)));
    REQUIRE(r.has_value());
    CHECK(*r * *r == GaussianRational(Rational(0), Rational(2)));
    const auto m = gaussian_sqrt(GaussianRational(-4L));
    REQUIRE(m.has_value());
    CHECK(*m * *m == GaussianRational(-4L));
    CHECK_FALSE(gaussian_sqrt(GaussianRational(3L)).has_value());

    RationalMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 1;
    CHECK(a * inverse(a) == RationalMatrix::identity(2));
    CHECK(rank(a) == 2);
    CHECK(nullspace(a).cols() == 0);
    CHECK_THROWS_AS(inverse(RationalMatrix(2, 2)), std::domain_error);
}
