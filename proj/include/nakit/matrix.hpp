#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "nakit/rational.hpp"

namespace nakit {

using Vec = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    Vec apply(const Vec& x) const {
        assert(x.size() == cols_);
        Vec y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j)) && !is_zero(x[j])) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

namespace detail {

// Reduced row echelon form computed in place; returns the pivot columns.
// First-nonzero pivoting: deterministic, and exactness makes stability moot.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(Matrix m) {
    return detail::rref_in_place(m).size();
}

/// Basis of the right null space {x : m x = 0}, ordered by free column.
/// Empty exactly when rank = cols.
inline std::vector<Vec> kernel_basis(Matrix m) {
    std::vector<std::size_t> pivots = detail::rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Solution {
    Vec particular;             // one solution of a x = b
    std::vector<Vec> kernel;    // basis of {x : a x = 0}
};

/// Exact solve. Returns nullopt when inconsistent.
inline std::optional<Solution> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = detail::rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Solution s;
    s.particular.assign(a.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) s.particular[pivots[r]] = aug(r, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(a.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, f);
        s.kernel.push_back(std::move(v));
    }
    return s;
}

} // namespace nakit
