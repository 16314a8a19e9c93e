#pragma once

// Template definitions for matrix_oracle.hpp.

namespace springer {

template <class F>
Partition jordan_type(const Matrix<F>& x)
{
    if (x.rows() != x.cols())
        throw std::invalid_argument("jordan_type: matrix is not square");
    const std::size_t N = x.rows();
    std::vector<std::size_t> ranks{N};
    Matrix<F> power = Matrix<F>::identity(N);
    for (std::size_t k = 1; k <= N; ++k) {
        power = power * x;
        ranks.push_back(rank(power));
        if (ranks.back() == 0)
            break;
    }
    if (ranks.back() != 0)
        throw std::domain_error("jordan_type: matrix is not nilpotent");
    // Column k of the diagram has rank(x^{k-1}) - rank(x^k) boxes.
    std::vector<int> columns;
    for (std::size_t k = 1; k < ranks.size(); ++k)
        columns.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
    return conjugate(Partition(std::move(columns)));
}

}  // namespace springer
