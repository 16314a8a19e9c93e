#include "springer/matrix_oracle.hpp"

#include "springer/conic.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>

namespace springer {

GaussianMatrix to_gaussian(const RationalMatrix& m)
{
    GaussianMatrix g(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            g(r, c) = GaussianRational(m(r, c));
    return g;
}

std::size_t FormContext::e(int i) const
{
    const int n = N / 2;
    if (N % 2 == 1) {
        if (i < 0 || i > n)
            throw std::out_of_range("FormContext::e: index out of range");
        return static_cast<std::size_t>(i);
    }
    if (i < 1 || i > n)
        throw std::out_of_range("FormContext::e: index out of range");
    return static_cast<std::size_t>(i - 1);
}

std::size_t FormContext::f(int i) const
{
    const int n = N / 2;
    if (i < 1 || i > n)
        throw std::out_of_range("FormContext::f: index out of range");
    return static_cast<std::size_t>(N % 2 == 1 ? n + i : n + i - 1);
}

FormContext form_matrix(int N)
{
    if (N < 0)
        throw std::invalid_argument("form_matrix: negative N");
    FormContext ctx;
    ctx.N = N;
    ctx.J = RationalMatrix(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    if (N % 2 == 1)
        ctx.J(0, 0) = 1;
    for (int i = 1; i <= N / 2; ++i) {
        ctx.J(ctx.e(i), ctx.f(i)) = 1;
        ctx.J(ctx.f(i), ctx.e(i)) = 1;
    }
    return ctx;
}

RationalMatrix adjoint(const RationalMatrix& x, const FormContext& ctx)
{
    // J is its own inverse.
    return ctx.J * x.transpose() * ctx.J;
}

bool is_self_adjoint(const RationalMatrix& x, const FormContext& ctx)
{
    return adjoint(x, ctx) == x;
}

RationalMatrix t_n(const FormContext& ctx)
{
    const int n = ctx.N / 2;
    if (n < 1)
        throw std::invalid_argument("t_n: needs N >= 2");
    RationalMatrix t = RationalMatrix::identity(static_cast<std::size_t>(ctx.N));
    const std::size_t a = ctx.e(n);
    const std::size_t b = ctx.f(n);
    t(a, a) = 0;
    t(b, b) = 0;
    t(a, b) = 1;
    t(b, a) = 1;
    return t;
}

RationalMatrix nilpotent_representative(int N, const Partition& lambda, Split split)
{
    if (lambda.size() != N)
        throw std::invalid_argument("nilpotent_representative: |lambda| != N");
    if (needs_split(lambda, N) == (split == Split::none))
        throw std::invalid_argument("nilpotent_representative: split tag does not match lambda");
    const FormContext ctx = form_matrix(N);
    const std::size_t dim = static_cast<std::size_t>(N);

    int chain_pairs = 0;
    for (int p : lambda.parts())
        chain_pairs += p / 2;

    // Middle vector and its norm for every odd part.
    struct Middle {
        RationalMatrix u;
        int norm;
    };
    std::vector<Middle> middles;
    {
        int pending = 0;
        for (int p : lambda.parts())
            pending += p % 2;
        std::size_t produced = 0;
        int next_pair = chain_pairs + 1;
        if (N % 2 == 1) {
            RationalMatrix u(dim, 1);
            u(ctx.e(0), 0) = 1;
            middles.push_back({u, 1});
            ++produced;
        }
        while (produced < static_cast<std::size_t>(pending)) {
            RationalMatrix plus(dim, 1);
            RationalMatrix minus(dim, 1);
            plus(ctx.e(next_pair), 0) = 1;
            plus(ctx.f(next_pair), 0) = Rational(1, 2);
            minus(ctx.e(next_pair), 0) = 1;
            minus(ctx.f(next_pair), 0) = Rational(-1, 2);
            middles.push_back({plus, 1});
            middles.push_back({minus, -1});
            produced += 2;
            ++next_pair;
        }
    }

    RationalMatrix P(dim, dim);
    RationalMatrix shift(dim, dim);
    std::size_t col = 0;
    int next_pair = 1;
    std::size_t next_middle = 0;
    for (int p : lambda.parts()) {
        const int k = p / 2;
        const int s = next_pair - 1;
        next_pair += k;
        const std::size_t start = col;
        for (int j = 0; j < k; ++j)
            P(ctx.e(s + j + 1), col++) = 1;
        Rational g = 1;
        if (p % 2 == 1) {
            const Middle& m = middles[next_middle++];
            g = m.norm;
            for (std::size_t r = 0; r < dim; ++r)
                P(r, col) = m.u(r, 0);
            ++col;
        }
        for (int m = 0; m < k; ++m)
            P(ctx.f(s + k - m), col++) = g;
        for (std::size_t j = start + 1; j < col; ++j)
            shift(j - 1, j) = 1;
    }

    RationalMatrix x = P * shift * inverse(P);
    if (split == Split::minus) {
        const RationalMatrix t = t_n(ctx);
        x = t * x * t;
    }
    return x;
}

std::pair<std::int64_t, std::int64_t> centralizer_dims(const RationalMatrix& x,
                                                       const FormContext& ctx)
{
    const std::size_t N = static_cast<std::size_t>(ctx.N);
    const std::size_t vars = N * N;
    auto var = [N](std::size_t r, std::size_t c) { return r * N + c; };
    const RationalMatrix& J = ctx.J;

    auto solve = [&](int sign) {
        RationalMatrix eq(2 * vars, vars);
        std::size_t row = 0;
        // [x, y] = 0
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j, ++row)
                for (std::size_t k = 0; k < N; ++k) {
                    if (!is_zero(x(i, k)))
                        eq(row, var(k, j)) += x(i, k);
                    if (!is_zero(x(k, j)))
                        eq(row, var(i, k)) -= x(k, j);
                }
        // J y^T J + sign * y = 0
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j, ++row) {
                for (std::size_t a = 0; a < N; ++a) {
                    if (is_zero(J(i, a)))
                        continue;
                    for (std::size_t b = 0; b < N; ++b)
                        if (!is_zero(J(b, j)))
                            eq(row, var(b, a)) += J(i, a) * J(b, j);
                }
                eq(row, var(i, j)) += sign;
            }
        return static_cast<std::int64_t>(vars - rank(eq));
    };
    return {solve(+1), solve(-1)};
}

namespace {

// v^T J w for column vectors.
GaussianRational pairing(const GaussianMatrix& v, const GaussianMatrix& JG, const GaussianMatrix& w)
{
    return (v.transpose() * JG * w)(0, 0);
}

GaussianMatrix combination(const GaussianMatrix& U, const std::vector<GaussianRational>& coef)
{
    GaussianMatrix v(U.rows(), 1);
    for (std::size_t c = 0; c < U.cols(); ++c) {
        if (coef[c].is_zero())
            continue;
        for (std::size_t r = 0; r < U.rows(); ++r)
            v(r, 0) += coef[c] * U(r, c);
    }
    return v;
}

using RationalVector = std::vector<Rational>;
using Coefficients = std::vector<GaussianRational>;

// Squarefree part of a nonzero rational, keeping the sign.
mpz_class core_of(const Rational& q)
{
    return split_square(mpz_class(q.get_num() * q.get_den())).core;
}

// Squarefree part of a * b for squarefree a and b.
mpz_class core_product(const mpz_class& a, const mpz_class& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return (a / g) * (b / g);
}

// One vector of an orthogonal basis for a rational diagonal form, with its value
// and the squarefree part of that value.
struct Piece {
    RationalVector vec;
    Rational value;
    mpz_class core;
};

// A vector in frame coordinates with the squarefree part of its frame value.
struct FrameVector {
    RationalVector c;
    mpz_class core;
};

// Pieces rescaled to squarefree integer values d_k; coordinates c_k stand for the
// vector sum_k c_k s_k p_k. Optionally the values of three pieces are also made
// pairwise coprime, which rescales the whole form by lambda.
struct Frame {
    std::vector<const Piece*> pieces;
    std::vector<Rational> scale;
    std::vector<mpz_class> d;
    mpz_class lambda = 1;  // d_k = lambda s_k^2 q(p_k)
    mpz_class lambda_core = 1;

    Frame(std::vector<const Piece*> ps, bool coprime) : pieces(std::move(ps))
    {
        for (const Piece* p : pieces) {
            d.push_back(p->core);
            const auto r = rational_sqrt(Rational(p->value / Rational(p->core)));
            if (!r)
                throw std::logic_error("normal_basis: inconsistent squarefree part");
            scale.push_back(1 / *r);
        }
        if (coprime && pieces.size() == 3)
            for (bool changed = true; changed;) {
                changed = false;
                for (std::size_t j = 0; j < 3; ++j)
                    for (std::size_t l = j + 1; l < 3; ++l) {
                        mpz_class g;
                        mpz_gcd(g.get_mpz_t(), d[j].get_mpz_t(), d[l].get_mpz_t());
                        if (g == 1)
                            continue;
                        const std::size_t o = 3 - j - l;
                        mpz_class h;
                        mpz_gcd(h.get_mpz_t(), g.get_mpz_t(), d[o].get_mpz_t());
                        d[j] /= g;
                        d[l] /= g;
                        d[o] = d[o] * g / (h * h);
                        scale[j] /= g;
                        scale[l] /= g;
                        scale[o] /= h;
                        lambda *= g;
                        lambda_core = core_product(lambda_core, g);
                        changed = true;
                    }
            }
    }

    std::size_t size() const { return d.size(); }

    Rational pairing(const RationalVector& u, const RationalVector& v) const
    {
        Rational sum = 0;
        for (std::size_t k = 0; k < d.size(); ++k)
            if (sgn(u[k]) != 0 && sgn(v[k]) != 0)
                sum += Rational(d[k]) * u[k] * v[k];
        return sum;
    }

    RationalVector unit(std::size_t k) const
    {
        RationalVector e(d.size());
        e[k] = 1;
        return e;
    }

    Piece embed(const FrameVector& f) const
    {
        RationalVector v(pieces[0]->vec.size());
        for (std::size_t k = 0; k < d.size(); ++k)
            if (sgn(f.c[k]) != 0)
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] += f.c[k] * scale[k] * pieces[k]->vec[i];
        return {std::move(v), pairing(f.c, f.c) / Rational(lambda), core_product(f.core, lambda_core)};
    }

    // A frame vector e_k paired with the isotropic u, spanning a hyperbolic plane.
    std::vector<FrameVector> hyperbolic(const RationalVector& u) const
    {
        std::size_t k = 0;
        while (sgn(Rational(d[k]) * u[k]) == 0)
            ++k;
        RationalVector h = u;
        const Rational t = pairing(u, unit(k)) / Rational(d[k]);
        h[k] -= t;
        return {{unit(k), d[k]}, {std::move(h), mpz_class(-d[k])}};
    }

    // Completes orthogonal frame vectors to an orthogonal basis of the whole block.
    std::vector<Piece> complete(std::vector<FrameVector> known) const
    {
        const std::size_t m = d.size();
        mpz_class missing_core = 1;
        for (const auto& x : d)
            missing_core = core_product(missing_core, x);
        for (const auto& f : known)
            missing_core = core_product(missing_core, f.core);
        for (std::size_t k = 0; k < m && known.size() < m; ++k) {
            RationalVector r = unit(k);
            for (const auto& f : known) {
                const Rational t = pairing(r, f.c) / pairing(f.c, f.c);
                for (std::size_t i = 0; i < m; ++i)
                    r[i] -= t * f.c[i];
            }
            const Rational value = pairing(r, r);
            if (sgn(value) == 0)
                continue;
            const mpz_class core = known.size() + 1 == m ? missing_core : core_of(value);
            missing_core = core_product(missing_core, core);
            known.push_back({std::move(r), core});
        }
        if (known.size() != m)
            throw std::logic_error("normal_basis: degenerate block");
        std::vector<Piece> out;
        for (const auto& f : known)
            out.push_back(embed(f));
        return out;
    }
};

// A vector of value +-s^2 with s != 0, or a hyperbolic plane, found on conics
// d0 x^2 + d1 y^2 = T with T = e lambda s^2 - d2 z^2 - d3 w^2.
std::optional<std::vector<Piece>> square_value(const Frame& f)
{
    const std::size_t m = f.size();
    const int rz = m >= 4 ? 4 : (m == 3 ? 10 : 0);
    const int rw = m >= 4 ? 4 : 0;
    constexpr int kSteps = 12;
    const Rational d0(f.d[0]);
    const Rational d1(f.d[1]);
    // The real place forces the sign of T when d0 and d1 share a sign.
    const int forced = sgn(d0) == sgn(d1) ? sgn(d0) : 0;
    for (int k = 0; k < kSteps; ++k)
        for (int e : {1, -1})
            for (int z = 0; z <= rz; ++z)
                for (int w = 0; w <= rw; ++w) {
                    Rational base = 0;
                    if (m >= 3)
                        base += Rational(f.d[2]) * z * z;
                    if (m >= 4)
                        base += Rational(f.d[3]) * w * w;
                    const Rational lead(e * f.lambda);
                    // Smallest s with sgn(lead s^2 - base) = forced, then k further steps.
                    mpz_class s0 = 0;
                    if (forced != 0 && sgn(lead) == forced && sgn(base) == forced) {
                        const Rational ratio = base / lead;
                        mpz_class fl;
                        mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
                        mpz_sqrt(s0.get_mpz_t(), fl.get_mpz_t());
                    }
                    const mpz_class sv = s0 + k;
                    const Rational T = lead * Rational(sv * sv) - base;
                    if (forced != 0 && sgn(T) != forced && sgn(T) != 0)
                        continue;
                    if (sgn(sv) == 0 && z == 0 && w == 0)
                        continue;
                    RationalVector c(m);
                    if (m >= 3)
                        c[2] = z;
                    if (m >= 4)
                        c[3] = w;
                    if (sgn(T) != 0) {
                        const auto pt = conic_point({d0, d1, Rational(-T)});
                        if (!pt)
                            continue;
                        const auto& [x, y, u] = *pt;
                        if (sgn(u) == 0) {
                            RationalVector iso(m);
                            iso[0] = x;
                            iso[1] = y;
                            return f.complete(f.hyperbolic(iso));
                        }
                        c[0] = x / u;
                        c[1] = y / u;
                    }
                    if (sgn(sv) == 0)
                        return f.complete(f.hyperbolic(c));

                    std::vector<FrameVector> known{{c, mpz_class(e * f.lambda_core)}};
                    if (sgn(T) != 0) {
                        RationalVector y1(m);
                        y1[0] = d1 * c[1];
                        y1[1] = -d0 * c[0];
                        known.push_back(
                            {std::move(y1), core_product(core_product(f.d[0], f.d[1]), core_of(T))});
                    } else {
                        known.push_back({f.unit(0), f.d[0]});
                        known.push_back({f.unit(1), f.d[1]});
                    }
                    if (m == 3 && z == 0 && sgn(T) != 0)
                        known.push_back({f.unit(2), f.d[2]});
                    if (m == 4 && z == 0 && w == 0) {
                        known.push_back({f.unit(2), f.d[2]});
                        known.push_back({f.unit(3), f.d[3]});
                    } else if (m == 4 && sgn(base) != 0) {
                        RationalVector y2(m);
                        y2[2] = Rational(f.d[3]) * w;
                        y2[3] = -Rational(f.d[2]) * z;
                        known.push_back(
                            {std::move(y2), core_product(core_product(f.d[2], f.d[3]), core_of(base))});
                    }
                    return f.complete(std::move(known));
                }
    return std::nullopt;
}

// X + iY is isotropic exactly when q(X) = q(Y) and X, Y are orthogonal, so Y is
// sought on the conic q(Y) = q(X) in the orthogonal complement of X. The two
// vectors then split off a plane <A, A>.
std::optional<std::vector<Piece>> equal_pair(const Frame& f)
{
    using Triple = std::array<Rational, 3>;
    const Triple d{Rational(f.d[0]), Rational(f.d[1]), Rational(f.d[2])};
    auto q = [&d](const Triple& v) {
        return Rational(d[0] * v[0] * v[0] + d[1] * v[1] * v[1] + d[2] * v[2] * v[2]);
    };
    auto vec = [](const Triple& t) { return RationalVector(t.begin(), t.end()); };

    constexpr int kRadius = 8;
    for (int r = 1; r <= kRadius; ++r)
        for (int x0 = 0; x0 <= r; ++x0)
            for (int x1 = -r; x1 <= r; ++x1)
                for (int x2 = -r; x2 <= r; ++x2) {
                    if (std::max({x0, std::abs(x1), std::abs(x2)}) != r)
                        continue;
                    if (x0 == 0 && (x1 < 0 || (x1 == 0 && x2 < 0)))
                        continue;
                    const Triple X{Rational(x0), Rational(x1), Rational(x2)};
                    const Rational A = q(X);
                    if (sgn(A) == 0)
                        return f.complete(f.hyperbolic(vec(X)));
                    const Triple w{Rational(d[0] * x0), Rational(d[1] * x1), Rational(d[2] * x2)};
                    const Triple Y1 = (x0 != 0 || x1 != 0)
                                          ? Triple{w[1], Rational(-w[0]), Rational(0)}
                                          : Triple{Rational(1), Rational(0), Rational(0)};
                    const Triple dY{Rational(d[0] * Y1[0]), Rational(d[1] * Y1[1]),
                                    Rational(d[2] * Y1[2])};
                    const Triple Y2{Rational(w[1] * dY[2] - w[2] * dY[1]),
                                    Rational(w[2] * dY[0] - w[0] * dY[2]),
                                    Rational(w[0] * dY[1] - w[1] * dY[0])};
                    const Rational e1 = q(Y1);
                    const Rational e2 = q(Y2);
                    if (sgn(e1) == 0)
                        return f.complete(f.hyperbolic(vec(Y1)));
                    if (sgn(e2) == 0)
                        return f.complete(f.hyperbolic(vec(Y2)));
                    const auto pt = conic_point({e1, e2, Rational(-A)});
                    if (!pt)
                        continue;
                    const auto& [u, v, z] = *pt;
                    Triple Y;
                    for (std::size_t k = 0; k < 3; ++k)
                        Y[k] = u * Y1[k] + v * Y2[k];
                    if (sgn(z) == 0)
                        return f.complete(f.hyperbolic(vec(Y)));
                    for (auto& y : Y)
                        y /= z;
                    const mpz_class core = core_of(A);
                    return f.complete({{vec(X), core}, {vec(Y), core}});
                }
    return std::nullopt;
}

Coefficients scaled(const RationalVector& v, const GaussianRational& s)
{
    Coefficients out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = s * GaussianRational(v[i]);
    return out;
}

// Columns t_j over Q(i) with sum_i a_i t_ij t_il = delta_jl.
std::vector<Coefficients> orthonormal_basis(const std::vector<Rational>& a,
                                            const std::vector<mpz_class>& cores)
{
    const std::size_t m = a.size();
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < m; ++i) {
        RationalVector e(m);
        e[i] = 1;
        pieces.push_back({std::move(e), a[i], cores[i]});
    }
    const GaussianRational I(Rational(0), Rational(1));
    std::vector<Coefficients> out;
    for (std::size_t rounds = 0; !pieces.empty(); ++rounds) {
        if (rounds > 4 * m)
            throw std::logic_error("normal_basis: splitting of the top form stalled");
        bool done = false;
        for (std::size_t k = 0; k < pieces.size() && !done; ++k)
            if (abs(pieces[k].core) == 1) {
                const auto r = gaussian_sqrt(GaussianRational(pieces[k].value));
                out.push_back(scaled(pieces[k].vec, GaussianRational(1) / *r));
                pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(k));
                done = true;
            }
        for (std::size_t j = 0; j < pieces.size() && !done; ++j)
            for (std::size_t l = j + 1; l < pieces.size() && !done; ++l) {
                if (abs(pieces[j].core) != abs(pieces[l].core))
                    continue;
                const auto rho = gaussian_sqrt(GaussianRational(pieces[j].value / pieces[l].value));
                // g and h are orthogonal of value A; c1^2 + c2^2 = 1/A.
                const Rational t = 1 / pieces[j].value;
                const GaussianRational c1{Rational((1 + t) / 2)};
                const GaussianRational c2 = I * GaussianRational(Rational((1 - t) / 2));
                const Coefficients g = scaled(pieces[j].vec, GaussianRational(1));
                const Coefficients h = scaled(pieces[l].vec, *rho);
                Coefficients e1(m), e2(m);
                for (std::size_t i = 0; i < m; ++i) {
                    e1[i] = c1 * g[i] + c2 * h[i];
                    e2[i] = c1 * h[i] - c2 * g[i];
                }
                out.push_back(std::move(e1));
                out.push_back(std::move(e2));
                pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(l));
                pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(j));
                done = true;
            }
        if (done)
            continue;

        const std::size_t width = std::min<std::size_t>(pieces.size(), 4);
        std::vector<const Piece*> head;
        for (std::size_t k = 0; k < width; ++k)
            head.push_back(&pieces[k]);
        auto rotated = [&](std::size_t n, std::size_t r) {
            std::vector<const Piece*> ps;
            for (std::size_t k = 0; k < n; ++k)
                ps.push_back(head[(k + r) % n]);
            return ps;
        };
        std::optional<std::vector<Piece>> fresh;
        std::size_t replaced = width;
        if (width >= 3) {
            const Frame f3(rotated(3, 0), true);
            if (const auto u = conic_point({Rational(f3.d[0]), Rational(f3.d[1]), Rational(f3.d[2])})) {
                fresh = f3.complete(f3.hyperbolic({(*u)[0], (*u)[1], (*u)[2]}));
                replaced = 3;
            }
            for (std::size_t r = 0; r < width && !fresh; ++r)
                fresh = square_value(Frame(rotated(width, r), width == 3));
            for (std::size_t r = 0; r < 3 && !fresh && width == 4; ++r) {
                fresh = square_value(Frame(rotated(3, r), true));
                replaced = 3;
            }
            if (!fresh) {
                fresh = equal_pair(f3);
                replaced = 3;
            }
        } else {
            fresh = square_value(Frame(head, false));
        }
        if (!fresh)
            throw std::runtime_error("normal_basis: top form does not split over Q(i)");
        pieces.erase(pieces.begin(), pieces.begin() + static_cast<std::ptrdiff_t>(replaced));
        pieces.insert(pieces.begin(), fresh->begin(), fresh->end());
    }
    return out;
}

std::size_t height(const GaussianRational& z)
{
    return mpz_sizeinbase(z.re.get_num_mpz_t(), 2) + mpz_sizeinbase(z.re.get_den_mpz_t(), 2) +
           mpz_sizeinbase(z.im.get_num_mpz_t(), 2) + mpz_sizeinbase(z.im.get_den_mpz_t(), 2);
}

struct TopChoice {
    Coefficients coeffs;
    mpz_class core;
};

// A vector of nonzero value for the symmetric form M among small combinations of
// basis vectors. Values of small height come first, and the first whose squarefree
// part is found within a modest factoring effort wins.
TopChoice anisotropic_vector(const GaussianMatrix& M)
{
    const std::size_t d = M.rows();
    struct Candidate {
        std::size_t height;
        std::size_t i, j;
        int b;
        Rational value;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < d; ++i) {
        if (!M(i, i).is_zero())
            candidates.push_back({height(M(i, i)), i, i, 0, M(i, i).re});
        for (std::size_t j = 0; j < d; ++j) {
            if (j == i)
                continue;
            for (int b : {1, -1, 2}) {
                if (b != 2 && j < i)
                    continue;
                const GaussianRational value =
                    M(i, i) + GaussianRational(b * b) * M(j, j) + GaussianRational(2 * b) * M(i, j);
                if (!value.is_zero())
                    candidates.push_back({height(value), i, j, b, value.re});
            }
        }
    }
    if (candidates.empty())
        throw std::logic_error("normal_basis: top form vanishes");
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return x.height < y.height; });
    auto choose = [&](const Candidate& c, const mpz_class& core) {
        Coefficients out(d);
        out[c.i] = 1;
        if (c.b != 0)
            out[c.j] = c.b;
        return TopChoice{std::move(out), core};
    };
    constexpr unsigned long kBudget = 200000;
    for (const auto& c : candidates) {
        const Rational& q = c.value;
        if (const auto split = split_square(mpz_class(q.get_num() * q.get_den()), kBudget))
            return choose(c, split->core);
    }
    return choose(candidates.front(), core_of(candidates.front().value));
}


}  // namespace

NormalBasis normal_basis(const RationalMatrix& x, const FormContext& ctx)
{
    const std::size_t N = static_cast<std::size_t>(ctx.N);
    if (x.rows() != N || x.cols() != N)
        throw std::invalid_argument("normal_basis: matrix size differs from N");
    const GaussianMatrix X = to_gaussian(x);
    const GaussianMatrix JG = to_gaussian(ctx.J);

    NormalBasis nb;
    nb.vectors = GaussianMatrix(N, 0);

    auto chain_from = [&](const GaussianMatrix& top, int k) {
        GaussianMatrix chain(N, static_cast<std::size_t>(k));
        GaussianMatrix w = top;
        for (std::size_t j = static_cast<std::size_t>(k); j-- > 0;) {
            for (std::size_t r = 0; r < N; ++r)
                chain(r, j) = w(r, 0);
            w = X * w;
        }
        return chain;
    };

    // Mutually orthogonal rational chains of one length, with <v, x^{k-1} v> = a_j.
    std::vector<GaussianMatrix> tops;
    std::vector<Rational> values;
    std::vector<mpz_class> cores;
    int group_length = 0;
    auto flush = [&]() {
        const auto T = orthonormal_basis(values, cores);
        for (const auto& t : T) {
            GaussianMatrix top(N, 1);
            for (std::size_t i = 0; i < tops.size(); ++i)
                if (!t[i].is_zero())
                    top = top + t[i] * tops[i];
            nb.vectors = GaussianMatrix::hstack(nb.vectors, chain_from(top, group_length));
            nb.chain_lengths.push_back(group_length);
        }
        tops.clear();
        values.clear();
        cores.clear();
    };

    GaussianMatrix U = GaussianMatrix::identity(N);
    while (U.cols() > 0) {
        // Largest block size on U.
        int k = 0;
        GaussianMatrix image = U;
        while (!image.is_zero()) {
            image = X * image;
            ++k;
            if (k > ctx.N)
                throw std::domain_error("normal_basis: matrix is not nilpotent");
        }
        if (k != group_length && !tops.empty())
            flush();
        group_length = k;
        const GaussianMatrix top_power = X.pow(static_cast<unsigned>(k - 1));
        const TopChoice choice = anisotropic_vector(U.transpose() * JG * top_power * U);
        const GaussianMatrix v = combination(U, choice.coeffs);

        // beta_l = <v, x^l v>; choose c = p^2 so that p(x) v pairs only with x^{k-1}.
        std::vector<GaussianMatrix> powers{v};
        for (int l = 1; l < k; ++l)
            powers.push_back(X * powers.back());
        std::vector<GaussianRational> beta;
        for (int l = 0; l < k; ++l)
            beta.push_back(pairing(v, JG, powers[static_cast<std::size_t>(l)]));
        const auto K = static_cast<std::size_t>(k);
        std::vector<GaussianRational> c(K), p(K);
        c[0] = 1;
        for (std::size_t t = 1; t < K; ++t) {
            GaussianRational sum;
            for (std::size_t j = 0; j < t; ++j)
                sum += c[j] * beta[K - 1 - t + j];
            c[t] = -(sum / beta[K - 1]);
        }
        p[0] = 1;
        for (std::size_t t = 1; t < K; ++t) {
            GaussianRational sum;
            for (std::size_t a = 1; a < t; ++a)
                sum += p[a] * p[t - a];
            p[t] = (c[t] - sum) / GaussianRational(2);
        }
        GaussianMatrix top(N, 1);
        for (std::size_t t = 0; t < K; ++t)
            top = top + p[t] * powers[t];
        tops.push_back(top);
        values.push_back(beta[K - 1].re);
        cores.push_back(choice.core);

        // U <- U intersected with the orthogonal complement of the chain.
        const GaussianMatrix chain = chain_from(top, k);
        U = U * nullspace(chain.transpose() * JG * U);
    }
    if (!tops.empty())
        flush();
    return nb;
}

GaussianMatrix gram_matrix(const NormalBasis& nb, const FormContext& ctx)
{
    return nb.vectors.transpose() * to_gaussian(ctx.J) * nb.vectors;
}

GaussianMatrix expected_gram(const std::vector<int>& chain_lengths)
{
    std::size_t total = 0;
    for (int k : chain_lengths)
        total += static_cast<std::size_t>(k);
    GaussianMatrix g(total, total);
    std::size_t start = 0;
    for (int k : chain_lengths) {
        const auto K = static_cast<std::size_t>(k);
        for (std::size_t j = 0; j < K; ++j)
            g(start + j, start + K - 1 - j) = 1;
        start += K;
    }
    return g;
}

bool is_chain_basis(const NormalBasis& nb, const RationalMatrix& x)
{
    const std::size_t total = nb.vectors.cols();
    GaussianMatrix shift(total, total);
    std::size_t start = 0;
    for (int k : nb.chain_lengths) {
        for (std::size_t j = 1; j < static_cast<std::size_t>(k); ++j)
            shift(start + j - 1, start + j) = 1;
        start += static_cast<std::size_t>(k);
    }
    return to_gaussian(x) * nb.vectors == nb.vectors * shift;
}

std::vector<GaussianRational> top_form_determinants(const NormalBasis& nb,
                                                    const RationalMatrix& x,
                                                    const FormContext& ctx)
{
    const GaussianMatrix X = to_gaussian(x);
    const GaussianMatrix JG = to_gaussian(ctx.J);
    std::vector<GaussianRational> dets;
    std::size_t start = 0;
    std::size_t i = 0;
    while (i < nb.chain_lengths.size()) {
        const int a = nb.chain_lengths[i];
        std::vector<std::size_t> tops;
        while (i < nb.chain_lengths.size() && nb.chain_lengths[i] == a) {
            tops.push_back(start + static_cast<std::size_t>(a) - 1);
            start += static_cast<std::size_t>(a);
            ++i;
        }
        const GaussianMatrix xa = X.pow(static_cast<unsigned>(a - 1));
        GaussianMatrix q(tops.size(), tops.size());
        for (std::size_t r = 0; r < tops.size(); ++r)
            for (std::size_t c = 0; c < tops.size(); ++c)
                q(r, c) = pairing(nb.vectors.column(tops[r]), JG, xa * nb.vectors.column(tops[c]));
        dets.push_back(determinant(q));
    }
    return dets;
}

RationalMatrix random_h_element(int N, std::uint64_t seed)
{
    const FormContext ctx = form_matrix(N);
    const std::size_t dim = static_cast<std::size_t>(N);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-2, 2);
    const RationalMatrix I = RationalMatrix::identity(dim);
    while (true) {
        RationalMatrix S(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = r + 1; c < dim; ++c) {
                S(r, c) = small(rng);
                S(c, r) = -S(r, c);
            }
        const RationalMatrix A = ctx.J * S;
        try {
            return inverse(I - A) * (I + A);
        } catch (const std::domain_error&) {
            continue;
        }
    }
}

RationalMatrix conjugate_by(const RationalMatrix& g, const RationalMatrix& x)
{
    return g * x * inverse(g);
}

}  // namespace springer
