#pragma once
#include <optional>
#include <vector>

#include "rca/scalars/matrix.hpp"
#include "rca/scalars/sign.hpp"

namespace rca {

// Congruence diagonalization of a Hermitian form A (beta(u, w) = u^T A conj(w)).
// basis row j is the vector B_j with beta(B_j, B_k) = 0 for j != k and
// beta(B_j, B_j) = pivots[j]; kernel directions get zero pivots.
template <class F>
struct Congruence {
    std::vector<F> pivots;
    Matrix<F> basis;                  // filled only when requested
    size_t negatives = 0, zeros = 0;  // counts of certified-negative and zero pivots
    std::optional<std::vector<F>> witness;  // first negative direction, original coordinates
    F witness_norm{};
};

// stop_at_negative: return as soon as a negative direction is found.
template <class F>
Congruence<F> congruence(const Matrix<F>& G, bool track_basis, bool stop_at_negative) {
    size_t n = G.rows();
    Matrix<F> A = G;
    Matrix<F> B;
    if (track_basis) B = Matrix<F>::identity(n);
    std::vector<bool> done(n, false);
    Congruence<F> out;
    auto record_negative = [&](const std::vector<F>& v, const F& norm) {
        if (!out.witness) {
            out.witness = v;
            out.witness_norm = norm;
        }
    };
    for (size_t step = 0; step < n; ++step) {
        size_t k = n;
        for (size_t i = 0; i < n; ++i)
            if (!done[i] && !is_zero(A(i, i))) {
                k = i;
                break;
            }
        if (k == n) {
            // all remaining diagonal entries vanish: B_j + a B_l has norm 2|a|^2
            bool rotated = false;
            for (size_t j = 0; j < n && !rotated; ++j) {
                if (done[j]) continue;
                for (size_t l = 0; l < n; ++l) {
                    if (done[l] || l == j || is_zero(A(j, l))) continue;
                    F a = A(j, l);
                    F ca = conj(a);
                    for (size_t x = 0; x < n; ++x)
                        if (!done[x] && x != j) A(j, x) += a * A(l, x);
                    for (size_t x = 0; x < n; ++x)
                        if (!done[x] && x != j) A(x, j) += ca * A(x, l);
                    A(j, j) = a * ca * F(2);
                    if (track_basis)
                        for (size_t c = 0; c < n; ++c) B(j, c) += a * B(l, c);
                    rotated = true;
                    k = j;
                    break;
                }
            }
            if (!rotated) {
                for (size_t j = 0; j < n; ++j)
                    if (!done[j]) {
                        out.pivots.push_back(F(0));
                        ++out.zeros;
                    }
                break;
            }
        }
        F p = A(k, k);
        done[k] = true;
        out.pivots.push_back(p);
        int s = sign_of(p);
        if (s < 0) {
            ++out.negatives;
            if (track_basis) {
                std::vector<F> v(n);
                for (size_t c = 0; c < n; ++c) v[c] = B(k, c);
                record_negative(v, p);
            }
            if (stop_at_negative) return out;
        }
        F inv = F(1) / p;
        for (size_t j = 0; j < n; ++j) {
            if (done[j] || is_zero(A(j, k))) continue;
            F f = A(j, k) * inv;
            for (size_t l = 0; l < n; ++l) {
                if (done[l] || is_zero(A(k, l))) continue;
                A(j, l) -= f * A(k, l);
            }
            A(j, k) = F(0);
            if (track_basis)
                for (size_t c = 0; c < n; ++c)
                    if (!is_zero(B(k, c))) B(j, c) -= f * B(k, c);
        }
        for (size_t l = 0; l < n; ++l)
            if (!done[l]) A(k, l) = F(0);
    }
    if (track_basis) out.basis = std::move(B);
    return out;
}

// Sign check first without the basis; the basis is rebuilt only when a witness is needed.
template <class F>
Congruence<F> congruence_with_witness(const Matrix<F>& G) {
    auto cg = congruence(G, false, true);
    if (cg.negatives == 0) return cg;
    return congruence(G, true, true);
}

// beta(v, v) for a coordinate vector
template <class F>
F form_norm(const Matrix<F>& G, const std::vector<F>& v) {
    F s(0);
    for (size_t i = 0; i < G.rows(); ++i) {
        if (is_zero(v[i])) continue;
        for (size_t j = 0; j < G.cols(); ++j)
            if (!is_zero(v[j]) && !is_zero(G(i, j))) s += v[i] * G(i, j) * conj(v[j]);
    }
    return s;
}

}  // namespace rca
