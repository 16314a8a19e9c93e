#include "springer/exact.hpp"

namespace springer {

namespace {

std::optional<mpz_class> integer_sqrt(const mpz_class& z)
{
    if (sgn(z) < 0 || mpz_perfect_square_p(z.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& q)
{
    // mpq_class values are kept canonical, so numerator and denominator are coprime.
    auto num = integer_sqrt(q.get_num());
    auto den = integer_sqrt(q.get_den());
    if (!num || !den)
        return std::nullopt;
    Rational r(*num, *den);
    r.canonicalize();
    return r;
}

std::string GaussianRational::to_string() const
{
    if (sgn(im) == 0)
        return re.get_str();
    if (sgn(re) == 0)
        return im.get_str() + "i";
    return "(" + re.get_str() + (sgn(im) > 0 ? "+" : "") + im.get_str() + "i)";
}

std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z)
{
    if (z.is_zero())
        return GaussianRational{};
    // (a + bi)^2 = z  =>  a^2 = (p + r)/2, b^2 = (r - p)/2, r = |z|.
    const auto r = rational_sqrt(z.norm());
    if (!r)
        return std::nullopt;
    const Rational a2 = (z.re + *r) / 2;
    if (sgn(a2) != 0) {
        const auto a = rational_sqrt(a2);
        if (!a)
            return std::nullopt;
        return GaussianRational{*a, Rational(z.im / (2 * *a))};
    }
    const auto b = rational_sqrt(Rational((*r - z.re) / 2));
    if (!b)
        return std::nullopt;
    return GaussianRational{Rational(0), *b};
}

}  // namespace springer
