#include "springer/dims.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace springer {

std::int64_t nu_H(int N)
{
    if (N < 0)
        throw std::invalid_argument("nu_H: negative N");
    const std::int64_t n = N / 2;
    return N % 2 == 1 ? n * n : n * n - n;
}

std::int64_t delta_P(int N, int N0)
{
    if (N0 < 0 || N0 > N || (N - N0) % 2 != 0)
        throw std::invalid_argument("delta_P: need 0 <= N0 <= N with N - N0 even");
    return (N - N0) / 2;
}

std::int64_t dim_X_uni(int N, int N0, std::int64_t dim_O_L)
{
    return 2 * nu_H(N) - 2 * nu_H(N0) + dim_O_L + delta_P(N, N0);
}

HalfInteger d_O(int N, int N0, std::int64_t dim_O, std::int64_t dim_O_L)
{
    const std::int64_t twice = (2 * nu_H(N) - dim_O) - (2 * nu_H(N0) - dim_O_L) + delta_P(N, N0);
    return HalfInteger::from_twice(twice);
}

HalfInteger s_value(std::int64_t dimZ_H_u, std::int64_t dimZ_L_v, std::int64_t delta_p)
{
    return HalfInteger::from_twice(dimZ_H_u - dimZ_L_v + delta_p);
}

HalfInteger delta_value(std::int64_t dim_O, std::int64_t dim_O_L, std::int64_t delta_p)
{
    return HalfInteger::from_twice(dim_O - dim_O_L + delta_p);
}

SAndDelta s_and_delta(std::int64_t dimZ_H_u, std::int64_t dimZ_L_v, std::int64_t dim_O,
                      std::int64_t dim_O_L, std::int64_t delta_p)
{
    return {s_value(dimZ_H_u, dimZ_L_v, delta_p), delta_value(dim_O, dim_O_L, delta_p)};
}

HalfInteger d0(std::int64_t nu_H_value, std::int64_t nu_L, std::int64_t nu_L_prime,
               std::int64_t dim_O_L, std::int64_t dim_O_L_prime, std::int64_t delta_p,
               std::int64_t delta_p_prime)
{
    return HalfInteger(2 * nu_H_value - nu_L - nu_L_prime) +
           HalfInteger::from_twice(dim_O_L + dim_O_L_prime + delta_p + delta_p_prime);
}

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images))
{
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int w : images_) {
        const int a = std::abs(w);
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
            throw std::invalid_argument("SignedPermutation: absolute values must permute 1..n");
        seen[static_cast<std::size_t>(a)] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return SignedPermutation(std::move(images));
}

int SignedPermutation::inverse(int i) const
{
    for (int j = 1; j <= n(); ++j) {
        const int w = (*this)(j);
        if (w == i)
            return j;
        if (w == -i)
            return -j;
    }
    throw std::out_of_range("SignedPermutation::inverse: letter out of range");
}

int SignedPermutation::sign_changes() const
{
    return static_cast<int>(std::count_if(images_.begin(), images_.end(),
                                          [](int w) { return w < 0; }));
}

namespace {

int count_positive_preimages(const SignedPermutation& w, int from, int to, int bound)
{
    int count = 0;
    for (int i = from; i <= to; ++i) {
        const int pre = w.inverse(i);
        if (pre >= 1 && pre <= bound)
            ++count;
    }
    return count;
}

void check_n0(const SignedPermutation& w, int n0)
{
    if (n0 < 0 || n0 > w.n())
        throw std::invalid_argument("n0 must lie in [0, n]");
}

}  // namespace

int b_w(const SignedPermutation& w, int n0)
{
    check_n0(w, n0);
    const int k = w.n() - n0;
    return count_positive_preimages(w, 1, k, k);
}

int delta_Q_w(const SignedPermutation& w, int n0)
{
    check_n0(w, n0);
    const int k = w.n() - n0;
    return count_positive_preimages(w, k + 1, w.n(), k);
}

SignedPermutation random_signed_permutation(int n, std::mt19937_64& rng, bool even_only)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    std::bernoulli_distribution coin(0.5);
    int negatives = 0;
    for (auto& w : images) {
        if (coin(rng)) {
            w = -w;
            ++negatives;
        }
    }
    if (even_only && negatives % 2 == 1)
        images.back() = -images.back();
    return SignedPermutation(std::move(images));
}

DeltaQSweep sweep_delta_Q(std::size_t trials, int max_n, std::uint64_t seed, bool even_only)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(1, max_n);
    DeltaQSweep sweep;
    for (std::size_t t = 0; t < trials; ++t) {
        const SignedPermutation w = random_signed_permutation(pick_n(rng), rng, even_only);
        ++sweep.permutations;
        for (int n0 = 0; n0 <= w.n(); ++n0) {
            const int bound = (w.n() - n0) - b_w(w, n0);
            const int dq = delta_Q_w(w, n0);
            ++sweep.checks;
            if (dq > bound)
                ++sweep.violations;
            else if (dq == bound && n0 < w.n())
                ++sweep.equalities;
        }
    }
    return sweep;
}

}  // namespace springer
