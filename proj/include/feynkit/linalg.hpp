#ifndef FEYNKIT_LINALG_HPP
#define FEYNKIT_LINALG_HPP

#include "feynkit/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace feynkit {

/// Dense matrix over exact rationals.  Row-major, desk scale.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QMatrix transpose() const
    {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix dimension mismatch");
        QMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const
    {
        if (x.size() != cols_)
            throw std::invalid_argument("matrix/vector dimension mismatch");
        std::vector<Rational> y(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                y[i] += at(i, j) * x[j];
        return y;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<std::size_t> rref(QMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        const Rational inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(QMatrix m) { return rref(m).size(); }

/// Solve A x = b exactly.  Returns nullopt when inconsistent; for
/// underdetermined systems, free variables are set to zero.
inline std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("rhs dimension mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    for (std::size_t p : pivots)
        if (p == a.cols())
            return std::nullopt; // pivot in the augmented column
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

/// Determinant by fraction-free elimination on a copy.
inline Rational determinant(QMatrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    Rational det(1);
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m.at(sel, col) == 0)
            ++sel;
        if (sel == n)
            return Rational(0);
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(sel, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        const Rational inv = 1 / m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0)
                continue;
            const Rational f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

/// Inverse of a square nonsingular matrix.
inline QMatrix inverse(const QMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n)
        throw std::invalid_argument("singular matrix");
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

/// Minimum-norm solution of the underdetermined system M x = e, i.e. the
/// unique solution lying in the row space of M: x = M^T (M M^T)^{-1} e.
/// Throws when M M^T is singular (rank-deficient rows).
inline std::vector<Rational> row_space_solution(const QMatrix& m, const std::vector<Rational>& e)
{
    const QMatrix mt = m.transpose();
    const QMatrix gram = m * mt;
    QMatrix gram_inv = inverse(gram); // throws on rank deficiency
    std::vector<Rational> y = gram_inv.apply(e);
    return mt.apply(y);
}

} // namespace feynkit

#endif
