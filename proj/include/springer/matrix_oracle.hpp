#pragma once

#include "springer/matrix.hpp"
#include "springer/orbit.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace springer {

/// The symmetric bilinear form <u, v> = u^T J v on k^N.
///
/// Odd N = 2n+1 uses the ordered basis (e0, e1..en, f1..fn) with <e0,e0> = 1
/// and <e_i, f_i> = 1; even N = 2n uses (e1..en, f1..fn).
struct FormContext {
    int N = 0;
    RationalMatrix J;

    std::size_t e(int i) const;  // index of e_i (e_0 only for odd N)
    std::size_t f(int i) const;  // index of f_i, 1 <= i <= n
};

FormContext form_matrix(int N);

/// x* = J^{-1} x^T J.
RationalMatrix adjoint(const RationalMatrix& x, const FormContext& ctx);
bool is_self_adjoint(const RationalMatrix& x, const FormContext& ctx);

/// The element t_n swapping e_n and f_n.
RationalMatrix t_n(const FormContext& ctx);

/// Self-adjoint nilpotent of Jordan type lambda. The plus tag of an even
/// lambda uses the chains f_{s+1} -> ... -> f_{s+k} -> e_{s+k} -> ... -> e_{s+1};
/// the minus tag is its t_n-conjugate. Throws std::invalid_argument when the
/// split tag does not match the partition.
RationalMatrix nilpotent_representative(int N, const Partition& lambda, Split split);

/// Jordan type from the ranks of powers. Throws std::domain_error if x is not nilpotent.
template <class F>
Partition jordan_type(const Matrix<F>& x);

/// (dim of the commutant in g^+, dim in g^-) for g^{+-} = {y : J y^T J = -+y}.
std::pair<std::int64_t, std::int64_t> centralizer_dims(const RationalMatrix& x,
                                                       const FormContext& ctx);

/// Basis {v_{c,j}} with x v_{c,j} = v_{c,j-1}, x v_{c,0} = 0 and
/// <v_{c,j}, v_{c',j'}> = 1 iff c = c' and j + j' = (chain length) - 1.
struct NormalBasis {
    GaussianMatrix vectors;          // columns grouped by chain, j ascending
    std::vector<int> chain_lengths;  // weakly decreasing
};

/// Constructs a normal basis over Q(i). Each chain top is a vector of value 1
/// for the form <v, x^{k-1} v>, found by diagonalizing that form and, when no
/// diagonal value is a square, through a hyperbolic plane or a bounded search
/// in three variables. Throws std::runtime_error if that search fails.
NormalBasis normal_basis(const RationalMatrix& x, const FormContext& ctx);

/// Gram matrix of the basis, and the expected pattern for its chain lengths.
GaussianMatrix gram_matrix(const NormalBasis& nb, const FormContext& ctx);
GaussianMatrix expected_gram(const std::vector<int>& chain_lengths);

/// True when x acts on the basis as the chain shift.
bool is_chain_basis(const NormalBasis& nb, const RationalMatrix& x);

/// Determinant of Q_i(v) = <v, x^{a-1} v> restricted to the span of the
/// chain tops of length a, one entry per block value a.
std::vector<GaussianRational> top_form_determinants(const NormalBasis& nb,
                                                    const RationalMatrix& x,
                                                    const FormContext& ctx);

/// Cayley transform g = (1 - A)^{-1}(1 + A) of a random A = J S in g^+
/// (S antisymmetric with small integer entries), resampled while 1 - A is
/// singular. Satisfies g^T J g = J and det g = 1.
RationalMatrix random_h_element(int N, std::uint64_t seed);

/// g x g^{-1}.
RationalMatrix conjugate_by(const RationalMatrix& g, const RationalMatrix& x);

}  // namespace springer

#include "springer/matrix_oracle_impl.hpp"
