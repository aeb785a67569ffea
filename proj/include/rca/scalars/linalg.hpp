#pragma once
#include <optional>
#include <vector>

#include "rca/scalars/matrix.hpp"

namespace rca {

inline Rational field_inverse(const Rational& q) { return 1 / q; }
inline Cyclotomic field_inverse(const Cyclotomic& x) { return x.inverse(); }

template <class F>
struct Rref {
    Matrix<F> m;
    std::vector<size_t> pivots;  // pivot column per nonzero row
};

template <class F>
Rref<F> rref(Matrix<F> a) {
    Rref<F> out;
    size_t row = 0;
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        size_t piv = row;
        while (piv < a.rows() && is_zero(a(piv, col))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(row, k));
        F inv = field_inverse(a(row, col));
        for (size_t k = col; k < a.cols(); ++k)
            if (!is_zero(a(row, k))) a(row, k) *= inv;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == row || is_zero(a(r, col))) continue;
            F f = a(r, col);
            for (size_t k = col; k < a.cols(); ++k)
                if (!is_zero(a(row, k))) a(r, k) -= f * a(row, k);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.m = std::move(a);
    return out;
}

template <class F>
size_t rank(const Matrix<F>& a) {
    return rref(a).pivots.size();
}

// Basis of the right kernel, as columns of the returned matrix.
template <class F>
Matrix<F> nullspace(const Matrix<F>& a) {
    auto r = rref(a);
    std::vector<bool> is_piv(a.cols(), false);
    for (auto p : r.pivots) is_piv[p] = true;
    std::vector<size_t> free;
    for (size_t j = 0; j < a.cols(); ++j)
        if (!is_piv[j]) free.push_back(j);
    Matrix<F> k(a.cols(), free.size());
    for (size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = F(1);
        for (size_t i = 0; i < r.pivots.size(); ++i) k(r.pivots[i], f) = -r.m(i, free[f]);
    }
    return k;
}

// Basis of the column space, in reduced form (columns with identity at `pivot_rows`).
template <class F>
struct ColumnBasis {
    Matrix<F> basis;
    std::vector<size_t> pivot_rows;
};

template <class F>
ColumnBasis<F> column_basis(const Matrix<F>& a) {
    auto r = rref(a.transpose());
    ColumnBasis<F> out;
    out.pivot_rows = r.pivots;
    out.basis = Matrix<F>(a.rows(), r.pivots.size());
    for (size_t j = 0; j < r.pivots.size(); ++j)
        for (size_t i = 0; i < a.rows(); ++i) out.basis(i, j) = r.m(j, i);
    return out;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    size_t n = a.rows();
    Matrix<F> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = F(1);
    }
    auto r = rref(aug);
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
    return inv;
}

// Solve a x = b for a single right-hand side; nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto r = rref(aug);
    std::vector<F> x(a.cols(), F(0));
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == a.cols()) return std::nullopt;
        x[r.pivots[i]] = r.m(i, a.cols());
    }
    return x;
}

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    size_t c = a.rows() ? a.cols() : b.cols();
    Matrix<F> m(a.rows() + b.rows(), c);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < c; ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

}  // namespace rca
