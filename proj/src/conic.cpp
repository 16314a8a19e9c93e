#include "springer/conic.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace springer {

namespace {

// A nontrivial factor of an odd composite n (Pollard rho, Brent's variant), giving
// up once the iteration budget is spent.
std::optional<mpz_class> rho_factor(const mpz_class& n, unsigned long& budget)
{
    for (unsigned long c = 1;; ++c) {
        auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
        mpz_class y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long batch = 64;
        while (g == 1) {
            if (budget < 2 * r)
                return std::nullopt;
            budget -= 2 * r;
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            for (unsigned long k = 0; k < r && g == 1; k += batch) {
                ys = y;
                for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = q * abs(mpz_class(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                const mpz_class diff = abs(mpz_class(x - ys));
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

// Large primes met so far; coefficients of related conics share many of them.
thread_local std::set<mpz_class> known_primes;

bool factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out, unsigned long& budget)
{
    if (n == 1)
        return true;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        known_primes.insert(n);
        return true;
    }
    const auto d = rho_factor(n, budget);
    return d && factor_into(*d, out, budget) && factor_into(n / *d, out, budget);
}

}  // namespace

std::optional<std::map<mpz_class, unsigned>> factor(const mpz_class& n, unsigned long budget)
{
    if (sgn(n) == 0)
        throw std::invalid_argument("factor: zero");
    std::map<mpz_class, unsigned> out;
    mpz_class m = abs(n);
    for (unsigned long p = 2; p < 1000 && mpz_class(p) * p <= m; p += (p == 2 ? 1 : 2))
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            m /= p;
            ++out[mpz_class(p)];
        }
    for (const auto& p : known_primes) {
        if (p > m)
            break;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
            m /= p;
            ++out[p];
        }
    }
    if (!factor_into(m, out, budget))
        return std::nullopt;
    return out;
}

std::map<mpz_class, unsigned> factor(const mpz_class& n)
{
    return *factor(n, std::numeric_limits<unsigned long>::max());
}

std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a_in, const mpz_class& p)
{
    mpz_class a = a_in % p;
    if (a < 0)
        a += p;
    if (a == 0)
        return mpz_class(0);
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1)
        return std::nullopt;

    // Tonelli-Shanks with p - 1 = q 2^s.
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t()) != 0) {
        q /= 2;
        ++s;
    }
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1)
        ++z;
    auto powm = [&p](const mpz_class& b, const mpz_class& e) {
        mpz_class r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    mpz_class c = powm(z, q);
    mpz_class r = powm(a, (q + 1) / 2);
    mpz_class t = powm(a, q);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        mpz_class u = t;
        while (u != 1) {
            u = u * u % p;
            ++i;
        }
        mpz_class b = c;
        for (unsigned long k = 0; k + i + 1 < m; ++k)
            b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return r;
}

std::optional<SquareSplit> split_square(const mpz_class& n, unsigned long budget)
{
    const auto factors = factor(n, budget);
    if (!factors)
        return std::nullopt;
    SquareSplit s{1, 1};
    for (const auto& [p, e] : *factors) {
        if (e % 2 == 1)
            s.core *= p;
        for (unsigned k = 0; k < e / 2; ++k)
            s.root *= p;
    }
    if (sgn(n) < 0)
        s.core = -s.core;
    return s;
}

SquareSplit split_square(const mpz_class& n)
{
    return *split_square(n, std::numeric_limits<unsigned long>::max());
}

namespace {

// t with t^2 = a mod |b| for squarefree b, chosen in (-|b|/2, |b|/2].
std::optional<mpz_class> sqrt_mod_squarefree(const mpz_class& a, const mpz_class& b)
{
    const mpz_class n = abs(b);
    mpz_class t = 0;
    mpz_class modulus = 1;
    for (const auto& [p, e] : factor(n)) {
        mpz_class r;
        if (p == 2) {
            r = a % 2;
            if (r < 0)
                r += 2;
        } else {
            const auto root = sqrt_mod_prime(a, p);
            if (!root)
                return std::nullopt;
            r = *root;
        }
        // Combine t (mod modulus) with r (mod p).
        mpz_class inv;
        const mpz_class mm = modulus % p;
        mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), p.get_mpz_t());
        mpz_class k = (r - t) % p * inv % p;
        if (k < 0)
            k += p;
        t += modulus * k;
        modulus *= p;
    }
    t %= n;
    if (2 * t > n)
        t -= n;
    return t;
}

void normalize(std::array<mpz_class, 3>& v)
{
    mpz_class g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            x /= g;
}

}  // namespace

std::optional<std::array<mpz_class, 3>> legendre_solve(const mpz_class& a, const mpz_class& b)
{
    if (a == 1)
        return std::array<mpz_class, 3>{1, 0, 1};
    if (b == 1)
        return std::array<mpz_class, 3>{0, 1, 1};
    if (a == -1 && b == -1)
        return std::nullopt;
    if (abs(a) > abs(b)) {
        auto r = legendre_solve(b, a);
        if (r)
            std::swap((*r)[0], (*r)[1]);
        return r;
    }
    const auto t = sqrt_mod_squarefree(a, b);
    if (!t)
        return std::nullopt;
    const mpz_class c = (*t * *t - a) / b;
    const SquareSplit cs = split_square(c);
    const auto sub = legendre_solve(a, cs.core);
    if (!sub)
        return std::nullopt;
    const auto& [X, Y, Z] = *sub;
    std::array<mpz_class, 3> out{Z + *t * X, cs.core * cs.root * Y, Z * *t + a * X};
    normalize(out);
    return out;
}

namespace {

using IntVector = std::array<mpz_class, 3>;

// A basis of the lattice spanned by integer rows, by gcd elimination column by column.
std::vector<IntVector> lattice_basis(std::vector<IntVector> rows)
{
    std::vector<IntVector> basis;
    for (std::size_t col = 0; col < 3; ++col) {
        std::optional<std::size_t> pivot;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) == 0)
                continue;
            if (!pivot) {
                pivot = i;
                continue;
            }
            IntVector& p = rows[*pivot];
            IntVector& r = rows[i];
            while (sgn(r[col]) != 0) {
                const mpz_class q = p[col] / r[col];
                for (std::size_t k = 0; k < 3; ++k)
                    p[k] -= q * r[k];
                std::swap(p, r);
            }
        }
        if (pivot) {
            basis.push_back(rows[*pivot]);
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(*pivot));
        }
    }
    return basis;
}

// LLL reduction (delta = 3/4) for the form sum_k w_k v_k^2 with w_k > 0.
void lll_reduce(std::vector<IntVector>& b, const IntVector& w)
{
    const std::size_t n = b.size();
    using RVector = std::array<Rational, 3>;
    auto dot = [&w](const auto& u, const auto& v) {
        Rational sum = 0;
        for (std::size_t k = 0; k < 3; ++k)
            sum += Rational(w[k]) * u[k] * v[k];
        return sum;
    };
    std::vector<RVector> star(n);
    std::vector<Rational> norm(n);
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
    auto orthogonalize = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < 3; ++k)
                star[i][k] = b[i][k];
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(b[i], star[j]) / norm[j];
                for (std::size_t k = 0; k < 3; ++k)
                    star[i][k] -= mu[i][j] * star[j][k];
            }
            norm[i] = dot(star[i], star[i]);
        }
    };
    orthogonalize();
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            mpz_class r;
            const Rational& m = mu[k][j];
            mpz_fdiv_q(r.get_mpz_t(), mpz_class(2 * m.get_num() + m.get_den()).get_mpz_t(),
                       mpz_class(2 * m.get_den()).get_mpz_t());
            if (sgn(r) == 0)
                continue;
            for (std::size_t t = 0; t < 3; ++t)
                b[k][t] -= r * b[j][t];
            orthogonalize();
        }
        const Rational m = mu[k][k - 1];
        if (norm[k] >= (Rational(3, 4) - m * m) * norm[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            orthogonalize();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
}

void make_primitive(IntVector& v)
{
    mpz_class g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            x /= g;
}

// A small solution of c0 x^2 + c1 y^2 + c2 z^2 = 0 (squarefree, pairwise coprime c)
// from a primitive solution p. Solutions congruent to p lie in the lattice spanned
// by p, c1 c2 e0, c0 c2 e1 and c0 c1 e2, on which the form is divisible by c0 c1 c2.
IntVector reduce_solution(const IntVector& c, const IntVector& p)
{
    auto form = [&c](const IntVector& v) {
        return mpz_class(c[0] * v[0] * v[0] + c[1] * v[1] * v[1] + c[2] * v[2] * v[2]);
    };
    const IntVector w{abs(c[0]), abs(c[1]), abs(c[2])};
    auto size = [&w](const IntVector& v) {
        return mpz_class(w[0] * v[0] * v[0] + w[1] * v[1] * v[1] + w[2] * v[2] * v[2]);
    };
    std::vector<IntVector> gens{p, IntVector{w[1] * w[2], 0, 0}, IntVector{0, w[0] * w[2], 0},
                                IntVector{0, 0, w[0] * w[1]}};
    auto basis = lattice_basis(std::move(gens));
    if (basis.size() != 3)
        return p;
    lll_reduce(basis, w);
    IntVector best = p;
    mpz_class best_size = size(p);
    constexpr int kSpan = 2;
    for (int i = -kSpan; i <= kSpan; ++i)
        for (int j = -kSpan; j <= kSpan; ++j)
            for (int l = -kSpan; l <= kSpan; ++l) {
                IntVector v;
                for (std::size_t t = 0; t < 3; ++t)
                    v[t] = i * basis[0][t] + j * basis[1][t] + l * basis[2][t];
                if (sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0)
                    continue;
                if (sgn(form(v)) != 0)
                    continue;
                const mpz_class sz = size(v);
                if (sz < best_size) {
                    best = v;
                    best_size = sz;
                }
            }
    make_primitive(best);
    return best;
}

// Solutions of c0 x^2 + c1 y^2 + c2 z^2 = 0 (squarefree, pairwise coprime c) lie
// in a lattice of index |c0 c1 c2| cut out by one linear congruence per
// coefficient, on which the form is divisible by c0 c1 c2. A reduced basis
// usually exposes a solution among small combinations. The outer optional is empty
// when the search is inconclusive; the inner one is empty when there is no solution
// (the sign and odd-prime conditions decide this, the prime 2 following by reciprocity).
std::optional<std::optional<IntVector>> lattice_solve(const IntVector& c)
{
    if (sgn(c[0]) == sgn(c[1]) && sgn(c[1]) == sgn(c[2]))
        return std::optional<IntVector>{};
    const IntVector w{abs(c[0]), abs(c[1]), abs(c[2])};
    const mpz_class M = w[0] * w[1] * w[2];
    // Row j of `rows` holds the congruence for modulus w[j], of the form
    // c_{j+1} v_{j+1} - k_j v_{j+2} = 0 with k_j^2 = -c_{j+1} c_{j+2}.
    IntVector F{0, 0, 0};
    for (std::size_t j = 0; j < 3; ++j) {
        if (w[j] == 1)
            continue;
        const std::size_t j1 = (j + 1) % 3;
        const std::size_t j2 = (j + 2) % 3;
        const auto k = sqrt_mod_squarefree(mpz_class(-c[j1] * c[j2]), w[j]);
        if (!k)
            return std::optional<IntVector>{};  // locally insoluble
        const mpz_class other = M / w[j];
        mpz_class inv;
        const mpz_class om = other % w[j];
        mpz_invert(inv.get_mpz_t(), om.get_mpz_t(), w[j].get_mpz_t());
        const mpz_class idem = other * inv;  // 1 mod w[j], 0 mod the others
        F[j1] += idem * c[j1];
        F[j2] -= idem * *k;
    }
    for (auto& f : F) {
        f %= M;
        if (f < 0)
            f += M;
    }
    std::vector<IntVector> gens{IntVector{M, 0, 0}, IntVector{0, M, 0}, IntVector{0, 0, M},
                                IntVector{F[1], -F[0], 0}, IntVector{F[2], 0, -F[0]},
                                IntVector{0, F[2], -F[1]}};
    auto basis = lattice_basis(std::move(gens));
    if (basis.size() != 3)
        return std::nullopt;
    lll_reduce(basis, w);
    std::optional<IntVector> best;
    mpz_class best_size;
    constexpr int kSpan = 2;
    for (int i = -kSpan; i <= kSpan; ++i)
        for (int j = -kSpan; j <= kSpan; ++j)
            for (int l = -kSpan; l <= kSpan; ++l) {
                IntVector v;
                for (std::size_t t = 0; t < 3; ++t)
                    v[t] = i * basis[0][t] + j * basis[1][t] + l * basis[2][t];
                if (sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0)
                    continue;
                if (sgn(mpz_class(c[0] * v[0] * v[0] + c[1] * v[1] * v[1] + c[2] * v[2] * v[2])) != 0)
                    continue;
                const mpz_class sz = w[0] * v[0] * v[0] + w[1] * v[1] * v[1] + w[2] * v[2] * v[2];
                if (!best || sz < best_size) {
                    best = v;
                    best_size = sz;
                }
            }
    if (!best)
        return std::nullopt;
    make_primitive(*best);
    return best;
}

}  // namespace

std::optional<std::array<Rational, 3>> conic_point(const std::array<Rational, 3>& d)
{
    for (const auto& x : d)
        if (sgn(x) == 0)
            throw std::invalid_argument("conic_point: zero coefficient");
    mpz_class L = 1;
    for (const auto& x : d)
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den().get_mpz_t());

    // Substitute X_j = t_j x_j to reach c0 X0^2 + c1 X1^2 + c2 X2^2 = 0 with c
    // squarefree and pairwise coprime, up to an overall factor.
    IntVector c;
    IntVector t;
    for (std::size_t j = 0; j < 3; ++j) {
        const SquareSplit sq = split_square(mpz_class(d[j].get_num() * (L / d[j].get_den())));
        c[j] = sq.core;
        t[j] = sq.root;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t l = j + 1; l < 3; ++l) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), c[j].get_mpz_t(), c[l].get_mpz_t());
                if (g == 1)
                    continue;
                const std::size_t o = 3 - j - l;
                mpz_class h;
                mpz_gcd(h.get_mpz_t(), g.get_mpz_t(), c[o].get_mpz_t());
                c[j] /= g;
                c[l] /= g;
                c[o] = c[o] * g / (h * h);
                t[j] *= g;
                t[l] *= g;
                t[o] *= h;
                changed = true;
            }
    }

    IntVector P;
    if (const auto lat = lattice_solve(c)) {
        if (!*lat)
            return std::nullopt;
        P = **lat;
    } else {
        // -c0 c2 u^2 - c1 c2 v^2 = w^2 gives the solution (c2 u, c2 v, w).
        const auto sol = legendre_solve(mpz_class(-c[0] * c[2]), mpz_class(-c[1] * c[2]));
        if (!sol)
            return std::nullopt;
        const auto& [u, v, w] = *sol;
        P = IntVector{c[2] * u, c[2] * v, w};
        make_primitive(P);
        P = reduce_solution(c, P);
    }

    std::array<Rational, 3> out;
    for (std::size_t j = 0; j < 3; ++j) {
        out[j] = Rational(P[j], t[j]);
        out[j].canonicalize();
    }
    return out;
}

}  // namespace springer
