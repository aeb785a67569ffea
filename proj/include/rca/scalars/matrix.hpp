#pragma once
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rca/scalars/cyclotomic.hpp"

namespace rca {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c, T(0)) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Matrix conj_transpose() const {
        Matrix t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = conj((*this)(i, j));
        return t;
    }
    Matrix transpose() const {
        Matrix t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix conjugate() const {
        Matrix t(r_, c_);
        for (size_t k = 0; k < a_.size(); ++k) t.a_[k] = conj(a_[k]);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
        Matrix m(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (is_zero(x)) continue;
                for (size_t j = 0; j < b.c_; ++j)
                    if (!is_zero(b(k, j))) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
        return a;
    }
    Matrix scaled(const T& s) const {
        Matrix m = *this;
        for (auto& x : m.a_) x *= s;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(r_, T(0));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j)
                if (!is_zero(v[j]) && !is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool is_zero_matrix() const {
        for (const auto& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

    std::vector<T>& data() { return a_; }
    const std::vector<T>& data() const { return a_; }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

// Column-sparse matrix; each column is a list of (row, value).
template <class T>
struct SparseCols {
    size_t rows = 0;
    std::vector<std::vector<std::pair<int, T>>> cols;

    Matrix<T> dense() const {
        Matrix<T> m(rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (const auto& [i, v] : cols[j]) m(i, j) += v;
        return m;
    }
};

template <class T, class U>
Matrix<T> convert(const Matrix<U>& m) {
    Matrix<T> r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = T(m(i, j));
    return r;
}

}  // namespace rca
