#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace springer {

using Rational = mpq_class;

/// Exact square root of a nonnegative rational, if it is a rational square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Element re + im*i of the Gaussian rationals Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(const Rational& r) : re(r) {}  // NOLINT(implicit)
    GaussianRational(long r) : re(r) {}              // NOLINT(implicit)
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return Rational(re * re + im * im); }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o)
    {
        const Rational n = o.norm();
        if (sgn(n) == 0)
            throw std::domain_error("GaussianRational: division by zero");
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }

    std::string to_string() const;
};

/// Exact square root in Q(i), if one exists.
std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z);

/// Uniform interface used by the matrix template.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const GaussianRational& z) { return z.to_string(); }

}  // namespace springer
