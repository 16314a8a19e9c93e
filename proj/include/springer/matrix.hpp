#pragma once

#include "springer/exact.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace springer {

/// Dense exact matrix over a field F (Rational or GaussianRational).
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!springer::is_zero(x))
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix column(std::size_t c) const
    {
        Matrix v(rows_, 1);
        for (std::size_t r = 0; r < rows_; ++r)
            v(r, 0) = (*this)(r, c);
        return v;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        a.require_same_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            a.data_[k] += b.data_[k];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        a.require_same_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            a.data_[k] -= b.data_[k];
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(i, k);
                if (springer::is_zero(x))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!springer::is_zero(b(k, j)))
                        p(i, j) += F(x * b(k, j));
            }
        return p;
    }

    friend Matrix operator*(const F& s, Matrix a)
    {
        for (auto& x : a.data_)
            x = F(s * x);
        return a;
    }

    Matrix pow(unsigned k) const
    {
        Matrix result = identity(rows_);
        for (unsigned i = 0; i < k; ++i)
            result = result * *this;
        return result;
    }

    /// Horizontal concatenation.
    static Matrix hstack(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_)
            throw std::invalid_argument("Matrix::hstack: row count mismatch");
        Matrix m(a.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c)
                m(r, c) = a(r, c);
            for (std::size_t c = 0; c < b.cols_; ++c)
                m(r, a.cols_ + c) = b(r, c);
        }
        return m;
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t r = 0; r < rows_; ++r) {
            out += '[';
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c > 0)
                    out += ' ';
                out += springer::to_string((*this)(r, c));
            }
            out += "]\n";
        }
        return out;
    }

private:
    void require_same_shape(const Matrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, col)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(p, c), m(row, c));
        const F inv = F(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) = F(m(row, c) * inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col)))
                continue;
            const F factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!is_zero(m(row, c)))
                    m(r, c) -= F(factor * m(row, c));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m)
{
    return row_reduce(m).size();
}

/// Basis of {v : m v = 0}, as the columns of the result.
template <class F>
Matrix<F> nullspace(Matrix<F> m)
{
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free.push_back(c);
    Matrix<F> basis(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = F(-m(r, free[k]));
    }
    return basis;
}

/// Throws std::domain_error when m is singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix<F> aug = Matrix<F>::hstack(m, Matrix<F>::identity(n));
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw std::domain_error("inverse: matrix is singular");
    Matrix<F> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

template <class F>
F determinant(Matrix<F> m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    F det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && is_zero(m(p, col)))
            ++p;
        if (p == n)
            return F(0);
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(p, c), m(col, c));
            det = F(-det);
        }
        det = F(det * m(col, col));
        const F inv = F(1) / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(m(r, col)))
                continue;
            const F factor = F(m(r, col) * inv);
            for (std::size_t c = col; c < n; ++c)
                m(r, c) -= F(factor * m(col, c));
        }
    }
    return det;
}

using RationalMatrix = Matrix<Rational>;
using GaussianMatrix = Matrix<GaussianRational>;

/// Entrywise embedding Q -> Q(i).
GaussianMatrix to_gaussian(const RationalMatrix& m);

}  // namespace springer
