#pragma once

#include "springer/exact.hpp"

#include <array>
#include <map>
#include <optional>

namespace springer {

/// Prime factorization of |n| (n != 0): small trial division, then Pollard rho
/// with probabilistic primality tests.
std::map<mpz_class, unsigned> factor(const mpz_class& n);
/// As above, but gives up (nullopt) after about `budget` rho iterations.
std::optional<std::map<mpz_class, unsigned>> factor(const mpz_class& n, unsigned long budget);

/// n = core * root^2 with core squarefree (carrying the sign of n) and root > 0.
struct SquareSplit {
    mpz_class core;
    mpz_class root;
};
SquareSplit split_square(const mpz_class& n);
std::optional<SquareSplit> split_square(const mpz_class& n, unsigned long budget);

/// Square root of a modulo an odd prime p, if a is a quadratic residue.
std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a, const mpz_class& p);

/// Nontrivial integer solution (x, y, z) of a x^2 + b y^2 = z^2 for nonzero
/// squarefree a, b, by Lagrange descent. Nothing if the conic has no rational point.
std::optional<std::array<mpz_class, 3>> legendre_solve(const mpz_class& a, const mpz_class& b);

/// Nontrivial rational (x, y, z) with d0 x^2 + d1 y^2 + d2 z^2 = 0 for nonzero d.
std::optional<std::array<Rational, 3>> conic_point(const std::array<Rational, 3>& d);

}  // namespace springer
