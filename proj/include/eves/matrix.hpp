#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eves/errors.hpp"
#include "eves/rational.hpp"

namespace eves {

/// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Builds a matrix whose rows are the given vectors (all of equal length).
    static Matrix from_rows(const std::vector<Vector>& rows)
    {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw InvalidInput("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Builds a matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<Vector>& cols)
    {
        return from_rows(cols).transposed();
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const
    {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    std::vector<Vector> row_vectors() const
    {
        std::vector<Vector> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back(row(i));
        return out;
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Vector operator*(const Vector& v) const
    {
        if (v.size() != cols_)
            throw InvalidInput("Matrix * vector: dimension mismatch");
        Vector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Matrix operator*(const Matrix& other) const
    {
        if (cols_ != other.rows_)
            throw InvalidInput("Matrix * Matrix: dimension mismatch");
        Matrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k)
                if ((*this)(i, k) != 0)
                    for (std::size_t j = 0; j < other.cols_; ++j)
                        out(i, j) += (*this)(i, k) * other(k, j);
        return out;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct EchelonForm {
    Matrix reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row-echelon form (leading entries 1).
inline EchelonForm rref(Matrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != lead_row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(pivot, j), m(lead_row, j));
        Rational inv = 1 / m(lead_row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(lead_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead_row || m(i, col) == 0)
                continue;
            Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= factor * m(lead_row, j);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m)
{
    return rref(m).rank();
}

inline std::size_t rank(const std::vector<Vector>& rows)
{
    return rank(Matrix::from_rows(rows));
}

/// Determinant by fraction-free (Bareiss) elimination: each row is first
/// scaled to integers, the integer determinant is computed without division
/// remainders, and the row scales are divided back out.
inline Rational determinant(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw InvalidInput("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;

    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a(i, j).get_num() * (row_lcm / a(i, j).get_den());
        scale *= row_lcm;
    }

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    Rational det(m[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

/// Coordinates c with sum_i c_i * basis[i] = v, or nothing when v is not in
/// the span. The basis rows must be independent.
inline std::optional<Vector> coordinates_in_basis(const std::vector<Vector>& basis, const Vector& v)
{
    if (basis.empty())
        return std::nullopt;
    const std::size_t r = basis.size();
    const std::size_t d = basis.front().size();
    if (v.size() != d)
        throw InvalidInput("coordinates_in_basis: dimension mismatch");

    Matrix aug(d, r + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            aug(i, j) = basis[j][i];
        aug(i, r) = v[i];
    }
    auto ech = rref(std::move(aug));
    if (ech.rank() != r || (!ech.pivots.empty() && ech.pivots.back() == r))
        return std::nullopt;
    Vector coords(r);
    for (std::size_t i = 0; i < r; ++i)
        coords[i] = ech.reduced(i, r);
    return coords;
}

} // namespace eves
