#pragma once

#include "springer/half_integer.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace springer {

/// Number of positive roots of SO_N.
std::int64_t nu_H(int N);

/// (N - N0)/2. Throws std::invalid_argument unless 0 <= N0 <= N with N - N0 even.
std::int64_t delta_P(int N, int N0);

/// 2 nu_H(N) - 2 nu_H(N0) + dim O_L + Delta_P.
std::int64_t dim_X_uni(int N, int N0, std::int64_t dim_O_L);

/// (nu_H - dim O/2) - (nu_L - dim O_L/2) + Delta_P/2.
HalfInteger d_O(int N, int N0, std::int64_t dim_O, std::int64_t dim_O_L);

struct SAndDelta {
    HalfInteger s;
    HalfInteger delta;
};

/// s = (dim Z_H(u) - dim Z_L(v))/2 + Delta_P/2.
HalfInteger s_value(std::int64_t dimZ_H_u, std::int64_t dimZ_L_v, std::int64_t delta_p);

/// delta = (dim O - dim O_L)/2 + Delta_P/2.
HalfInteger delta_value(std::int64_t dim_O, std::int64_t dim_O_L, std::int64_t delta_p);

SAndDelta s_and_delta(std::int64_t dimZ_H_u, std::int64_t dimZ_L_v, std::int64_t dim_O,
                      std::int64_t dim_O_L, std::int64_t delta_p);

/// 2 nu_H - nu_L - nu_L' + (dim O_L + dim O_L')/2 + (Delta_P + Delta_P')/2.
HalfInteger d0(std::int64_t nu_H_value, std::int64_t nu_L, std::int64_t nu_L_prime,
               std::int64_t dim_O_L, std::int64_t dim_O_L_prime, std::int64_t delta_p,
               std::int64_t delta_p_prime);

/// Signed permutation of {1..n}: images[i-1] = w(i) in {+-1..+-n}.
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> images);

    static SignedPermutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    /// w^{-1}(i), signed.
    int inverse(int i) const;

    /// Number of letters sent to negative images.
    int sign_changes() const;

private:
    std::vector<int> images_;
};

/// #{1 <= i <= n - n0 : 1 <= w^{-1}(i) <= n - n0}.
int b_w(const SignedPermutation& w, int n0);

/// #{n - n0 < i <= n : 1 <= w^{-1}(i) <= n - n0}.
int delta_Q_w(const SignedPermutation& w, int n0);

/// Uniform element of the signed permutation group; with even_only, uniform
/// in the subgroup with an even number of sign changes.
SignedPermutation random_signed_permutation(int n, std::mt19937_64& rng, bool even_only);

struct DeltaQSweep {
    std::size_t permutations = 0;
    std::size_t checks = 0;      // (w, n0) pairs examined
    std::size_t violations = 0;  // Delta_Q > Delta_P - b_w
    std::size_t equalities = 0;  // Delta_Q == Delta_P - b_w with n0 < n
};

/// Draws `trials` permutations with n uniform in [1, max_n] and checks the
/// bound for every n0 in [0, n].
DeltaQSweep sweep_delta_Q(std::size_t trials, int max_n, std::uint64_t seed, bool even_only);

}  // namespace springer
