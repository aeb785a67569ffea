#pragma once
#include <deque>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rca/groups/reflection_group.hpp"
#include "rca/scalars/linalg.hpp"
#include "rca/scalars/param_poly.hpp"
#include "rca/verma/monomials.hpp"

namespace rca {

template <class K>
K scalar_from(const Cyclotomic& x);
template <>
inline Cyclotomic scalar_from<Cyclotomic>(const Cyclotomic& x) {
    return x;
}
template <>
inline Rational scalar_from<Rational>(const Cyclotomic& x) {
    if (!x.is_rational()) throw std::domain_error("irrational entry in a rational computation: " + x.str());
    return x.rational_part();
}
template <>
inline ParamPoly scalar_from<ParamPoly>(const Cyclotomic& x) {
    return ParamPoly(x);
}

// (x^mu - s x^mu) / alpha_s for every monomial of degree m and every reflection s,
// as sparse combinations of degree m-1 monomials. Shared across modules of a group.
using DividedDifference = std::vector<std::pair<int, Cyclotomic>>;
const std::vector<std::vector<DividedDifference>>& divided_differences(const ReflectionGroup& g, int m);

// Rank one: c_j from the real coordinates b_1..b_{m-1}.
std::vector<Cyclotomic> cyclic_c_from_b(const ReflectionGroup& g, const std::vector<Rational>& b);
// b_n = 2 sum_j (1 - lambda^{jn}) / (1 - lambda^j) c_j
Cyclotomic cyclic_b(const ReflectionGroup& g, const std::vector<Cyclotomic>& c, int n);

// One value per reflection class (Coxeter groups), or b-coordinates (cyclic groups).
std::vector<Cyclotomic> point_parameters(const ReflectionGroup& g, const std::vector<Rational>& values);
// One indeterminate per reflection class; at most two classes.
std::vector<ParamPoly> symbolic_parameters(const ReflectionGroup& g);

// tau (x) S^m h*, basis index = monomial index * dim tau + tau index.
// Forms are beta(u, w) = u^T G conj(w).
template <class K>
class Verma {
public:
    Verma(GroupPtr g, Irrep tau, std::vector<K> c)
        : g_(std::move(g)), tau_(std::move(tau)), c_(std::move(c)), dt_(tau_.dim()) {
        if (static_cast<int>(c_.size()) != g_->num_classes())
            throw std::invalid_argument("need one parameter per reflection class");
        for (const auto& r : g_->reflections()) {
            Refl d;
            d.kappa = c_[r.class_index] * scalar_from<K>(Cyclotomic(2) / (Cyclotomic(1) - r.lambda));
            for (const auto& a : r.alpha) d.alpha.push_back(scalar_from<K>(a));
            const auto& rho = tau_.matrix(r.element_index);
            d.rho = Matrix<K>(dt_, dt_);
            for (int i = 0; i < dt_; ++i)
                for (int j = 0; j < dt_; ++j) d.rho(i, j) = scalar_from<K>(rho(i, j));
            refl_.push_back(std::move(d));
        }
    }

    const ReflectionGroup& group() const { return *g_; }
    const GroupPtr& group_ptr() const { return g_; }
    const Irrep& tau() const { return tau_; }
    const std::vector<K>& parameters() const { return c_; }
    int dim_tau() const { return dt_; }
    size_t index(size_t mono, int t) const { return mono * dt_ + t; }

    const MonomialBasis& monomials(int m) {
        while (static_cast<int>(mono_.size()) <= m)
            mono_.emplace_back(g_->dim_h(), static_cast<int>(mono_.size()));
        return mono_[m];
    }
    size_t dim(int m) { return monomials(m).size() * dt_; }

    const K& kappa(size_t s) const { return refl_[s].kappa; }

    // h_c(sigma) = dim h / 2 - sum_s kappa_s chi_sigma(s) / dim sigma
    K h_weight_of(const Irrep& sigma) const {
        K h = scalar_from<K>(Cyclotomic(frac(g_->dim_h(), 2)));
        for (size_t s = 0; s < refl_.size(); ++s) {
            auto ch = sigma.character(g_->reflections()[s].element_index) * Cyclotomic(frac(1, sigma.dim()));
            h -= refl_[s].kappa * scalar_from<K>(ch);
        }
        return h;
    }
    K h_weight() const { return h_weight_of(tau_); }

    // multiplication by x_i: degree m -> m+1
    SparseCols<K> x(int m, int i) {
        const auto& src = monomials(m);
        const auto& dst = monomials(m + 1);
        SparseCols<K> out;
        out.rows = dst.size() * dt_;
        out.cols.resize(src.size() * dt_);
        for (size_t a = 0; a < src.size(); ++a) {
            Exponents nu = src[a];
            nu[i] += 1;
            int b = dst.find(nu);
            for (int t = 0; t < dt_; ++t) out.cols[index(a, t)].push_back({static_cast<int>(index(b, t)), K(1)});
        }
        return out;
    }

    // action of the group element g on degree m
    SparseCols<K> w_action(int m, size_t g) {
        const auto& B = monomials(m);
        const auto& rho = tau_.matrix(g);
        SparseCols<K> out;
        out.rows = dim(m);
        out.cols.resize(dim(m));
        for (size_t a = 0; a < B.size(); ++a) {
            auto [coef, nu] = g_->act_monomial(g, B[a]);
            int b = B.find(nu);
            for (int t = 0; t < dt_; ++t)
                for (int u = 0; u < dt_; ++u) {
                    if (rho(u, t).is_zero()) continue;
                    out.cols[index(a, t)].push_back({static_cast<int>(index(b, u)), scalar_from<K>(coef * rho(u, t))});
                }
        }
        return out;
    }

    // Dunkl operators y_i: degree m -> m-1 (empty list for m = 0)
    const std::vector<SparseCols<K>>& y(int m) {
        while (static_cast<int>(y_.size()) <= m) build_y(static_cast<int>(y_.size()));
        return y_[m];
    }

    // contravariant form by lowering: beta(x_k u, u') = beta(u, y_k u')
    const Matrix<K>& gram(int m) {
        while (static_cast<int>(gram_.size()) <= m) build_gram(static_cast<int>(gram_.size()));
        return gram_[m];
    }

    // apolarity pairing times the tau form
    Matrix<K> beta0(int m) {
        const auto& B = monomials(m);
        const auto& F = tau_.form();
        Matrix<K> G(dim(m), dim(m));
        for (size_t a = 0; a < B.size(); ++a) {
            Rational f = factorial_product(B[a]);
            for (int t = 0; t < dt_; ++t)
                for (int u = 0; u < dt_; ++u)
                    if (!F(t, u).is_zero()) G(index(a, t), index(a, u)) = scalar_from<K>(F(t, u) * Cyclotomic(f));
        }
        return G;
    }

    // F_m with beta_c(v, v') = beta_0(F v, v'), built from the recursion over
    // the non-decreasing word of each monomial.
    const Matrix<K>& f_operator(int m) {
        while (static_cast<int>(f_.size()) <= m) build_f(static_cast<int>(f_.size()));
        return f_[m];
    }

    // Gram of exp(f) twisted form on degrees 0..D, f = (1/2) sum y_i^2.
    // Basis ordered by degree; offset(m) gives the first index of degree m.
    Matrix<K> gaussian_gram(int D) {
        if (!g_->is_coxeter()) throw std::invalid_argument("the Gaussian form needs a real reflection group");
        size_t N = truncation_dim(D);
        Matrix<K> E = exp_f(D);
        Matrix<K> B(N, N);
        for (int m = 0; m <= D; ++m) {
            const auto& G = gram(m);
            size_t o = offset(m);
            for (size_t i = 0; i < G.rows(); ++i)
                for (size_t j = 0; j < G.cols(); ++j) B(o + i, o + j) = G(i, j);
        }
        return E.transpose() * B * E.conjugate();
    }

    // exp(f) on the truncation (block upper triangular, columns are images)
    Matrix<K> exp_f(int D) {
        size_t N = truncation_dim(D);
        Matrix<K> E(N, N);
        for (int m = 0; m <= D; ++m) {
            for (size_t a = 0; a < dim(m); ++a) {
                std::vector<K> v(dim(m), K(0));
                v[a] = K(1);
                int deg = m;
                Rational fact = 1;
                for (int k = 0;; ++k) {
                    if (k > 0) fact *= k;
                    size_t o = offset(deg);
                    for (size_t i = 0; i < v.size(); ++i)
                        if (!is_zero(v[i])) E(o + i, offset(m) + a) += v[i] * scalar_from<K>(Cyclotomic(1 / fact));
                    if (deg < 2) break;
                    v = apply_f(deg, v);
                    deg -= 2;
                }
            }
        }
        return E;
    }

    // Index of the conjugate coordinate: conj(x_i) = x_{real_pair(i)} on the real form of h.
    // Identity for S_n; the dihedral basis is complex with the two coordinates swapped.
    int real_pair(int i) const {
        if (g_->kind() == GroupKind::DihedralOdd || g_->kind() == GroupKind::DihedralEven) return 1 - i;
        if (g_->kind() == GroupKind::Cyclic && g_->param() > 2) throw std::invalid_argument("cyclic groups have no real form of h");
        return i;
    }

    // f = (1/2) sum y_i y_i over a real orthonormal basis, on a degree-m vector
    std::vector<K> apply_f(int m, const std::vector<K>& v) {
        std::vector<K> out(dim(m - 2), K(0));
        for (int i = 0; i < g_->dim_h(); ++i) {
            auto w = apply(y(m)[real_pair(i)], v);
            auto z = apply(y(m - 1)[i], w);
            for (size_t k = 0; k < z.size(); ++k) out[k] += z[k];
        }
        K half = scalar_from<K>(Cyclotomic(frac(1, 2)));
        for (auto& e : out) e *= half;
        return out;
    }

    size_t offset(int m) {
        size_t o = 0;
        for (int k = 0; k < m; ++k) o += dim(k);
        return o;
    }
    size_t truncation_dim(int D) { return offset(D + 1); }

    // Sparse operator as a dense matrix block between degrees
    static Matrix<K> dense(const SparseCols<K>& A) { return A.dense(); }

    static std::vector<K> apply(const SparseCols<K>& A, const std::vector<K>& v) {
        std::vector<K> out(A.rows, K(0));
        for (size_t j = 0; j < A.cols.size(); ++j) {
            if (is_zero(v[j])) continue;
            for (const auto& [i, a] : A.cols[j]) out[i] += a * v[j];
        }
        return out;
    }

private:
    struct Refl {
        K kappa;
        std::vector<K> alpha;
        Matrix<K> rho;
    };

    void build_y(int m) {
        std::vector<SparseCols<K>> ys;
        if (m == 0) {
            y_.push_back(std::move(ys));
            return;
        }
        const auto& B = monomials(m);
        const auto& L = monomials(m - 1);
        const auto& dd = divided_differences(*g_, m);
        int r = g_->dim_h();
        ys.resize(r);
        for (int i = 0; i < r; ++i) {
            ys[i].rows = L.size() * dt_;
            ys[i].cols.resize(B.size() * dt_);
        }
        for (size_t a = 0; a < B.size(); ++a) {
            for (int t = 0; t < dt_; ++t) {
                std::vector<std::map<int, K>> acc(r);
                for (int i = 0; i < r; ++i) {
                    if (B[a][i] == 0) continue;
                    Exponents nu = B[a];
                    nu[i] -= 1;
                    acc[i][static_cast<int>(index(L.find(nu), t))] += K(B[a][i]);
                }
                for (size_t s = 0; s < refl_.size(); ++s) {
                    const auto& q = dd[a][s];
                    if (q.empty()) continue;
                    const auto& R = refl_[s];
                    for (const auto& [b, qc] : q) {
                        K qk = scalar_from<K>(qc);
                        for (int u = 0; u < dt_; ++u) {
                            if (is_zero(R.rho(u, t))) continue;
                            K base = R.kappa * qk * R.rho(u, t);
                            int row = static_cast<int>(index(b, u));
                            for (int i = 0; i < r; ++i)
                                if (!is_zero(R.alpha[i])) acc[i][row] -= base * R.alpha[i];
                        }
                    }
                }
                for (int i = 0; i < r; ++i) {
                    auto& col = ys[i].cols[index(a, t)];
                    for (auto& [row, v] : acc[i])
                        if (!is_zero(v)) col.push_back({row, std::move(v)});
                }
            }
        }
        y_.push_back(std::move(ys));
    }

    void build_gram(int m) {
        if (m == 0) {
            gram_.push_back(beta0(0));
            return;
        }
        const auto& prev = gram(m - 1);
        const auto& ys = y(m);
        const auto& B = monomials(m);
        const auto& L = monomials(m - 1);
        Matrix<K> G(dim(m), dim(m));
        for (size_t a = 0; a < B.size(); ++a) {
            int k = 0;
            while (B[a][k] == 0) ++k;
            Exponents nu = B[a];
            nu[k] -= 1;
            size_t pa = L.find(nu);
            const auto& Y = ys[k];
            for (int v = 0; v < dt_; ++v) {
                size_t row = index(a, v), prow = index(pa, v);
                for (size_t b = 0; b < Y.cols.size(); ++b) {
                    K sum(0);
                    for (const auto& [q, yv] : Y.cols[b])
                        if (!is_zero(prev(prow, q))) sum += prev(prow, q) * conj(yv);
                    G(row, b) = std::move(sum);
                }
            }
        }
        gram_.push_back(std::move(G));
    }

    void build_f(int m) {
        if (m == 0) {
            f_.push_back(Matrix<K>::identity(dt_));
            return;
        }
        const auto& prev = f_operator(m - 1);
        const auto& B = monomials(m);
        const auto& L = monomials(m - 1);
        int r = g_->dim_h();
        size_t n = dim(m);
        Matrix<K> F(n, n);
        K inv_m = scalar_from<K>(Cyclotomic(frac(1, m)));
        // F_{m-1} column (degree m-1 vector) times a linear form, accumulated into col
        auto add_times_linear = [&](std::vector<K>& col, size_t pcol, const std::vector<std::pair<int, K>>& lin,
                                    const K& scale) {
            for (size_t p = 0; p < prev.rows(); ++p) {
                const K& e = prev(p, pcol);
                if (is_zero(e)) continue;
                size_t mono = p / dt_;
                int u = static_cast<int>(p % dt_);
                for (const auto& [i, l] : lin) {
                    Exponents nu = L[mono];
                    nu[i] += 1;
                    col[index(B.find(nu), u)] += scale * l * e;
                }
            }
        };
        for (size_t a = 0; a < B.size(); ++a) {
            std::vector<int> word;
            for (int i = 0; i < r; ++i)
                for (int e = 0; e < B[a][i]; ++e) word.push_back(i);
            for (int t = 0; t < dt_; ++t) {
                std::vector<K> col(n, K(0));
                for (int j = 0; j < m; ++j) {
                    int aj = word[j];
                    // a_j F(a_1..^a_j..a_m v)
                    Exponents rest = B[a];
                    rest[aj] -= 1;
                    add_times_linear(col, index(L.find(rest), t), {{aj, K(1)}}, K(1));
                    // prefix and suffix of the word around position j
                    Exponents pre(r, 0), suf(r, 0);
                    for (int k = 0; k < j; ++k) pre[word[k]] += 1;
                    for (int k = j + 1; k < m; ++k) suf[word[k]] += 1;
                    for (size_t s = 0; s < refl_.size(); ++s) {
                        size_t el = g_->reflections()[s].element_index;
                        const auto& R = refl_[s];
                        // (1 - s)(x_aj)
                        Exponents unit(r, 0);
                        unit[aj] = 1;
                        auto [sc, snu] = g_->act_monomial(el, unit);
                        int img = 0;
                        while (snu[img] == 0) ++img;
                        std::map<int, K> lin_acc;
                        lin_acc[aj] += K(1);
                        lin_acc[img] -= scalar_from<K>(sc);
                        std::vector<std::pair<int, K>> lin;
                        for (auto& [i, l] : lin_acc)
                            if (!is_zero(l)) lin.push_back({i, l});
                        if (lin.empty()) continue;
                        // s(suffix v) = coef x^{s suf} (x) rho(s) e_t, then multiply by the prefix
                        auto [coef, ssuf] = g_->act_monomial(el, suf);
                        Exponents mono = ssuf;
                        for (int i = 0; i < r; ++i) mono[i] += pre[i];
                        size_t pm = L.find(mono);
                        K kc = -R.kappa * scalar_from<K>(coef);
                        for (int u = 0; u < dt_; ++u) {
                            if (is_zero(R.rho(u, t))) continue;
                            add_times_linear(col, index(pm, u), lin, kc * R.rho(u, t));
                        }
                    }
                }
                size_t c = index(a, t);
                for (size_t i = 0; i < n; ++i)
                    if (!is_zero(col[i])) F(i, c) = col[i] * inv_m;
            }
        }
        f_.push_back(std::move(F));
    }

    GroupPtr g_;
    Irrep tau_;
    std::vector<K> c_;
    int dt_;
    std::vector<Refl> refl_;
    // deques keep references stable while later degrees are added
    std::deque<MonomialBasis> mono_;
    std::deque<std::vector<SparseCols<K>>> y_;
    std::deque<Matrix<K>> gram_;
    std::deque<Matrix<K>> f_;
};

struct SingularSpace {
    int degree = 0;
    size_t dimension = 0;
    std::vector<std::pair<std::string, int>> types;  // W-type multiplicities, irreps order
    Matrix<Cyclotomic> basis;                         // columns
};

// Common kernel of the Dunkl operators on degree m; point parameters only.
template <class K>
SingularSpace singular_vectors(Verma<K>& V, int m) {
    const auto& G = V.group();
    const auto& ys = V.y(m);
    size_t n = V.dim(m), low = V.dim(m - 1);
    Matrix<K> stacked(low * ys.size(), n);
    for (size_t i = 0; i < ys.size(); ++i)
        for (size_t j = 0; j < n; ++j)
            for (const auto& [r, v] : ys[i].cols[j]) stacked(i * low + r, j) = v;
    Matrix<K> ker = nullspace(stacked);
    SingularSpace out;
    out.degree = m;
    out.dimension = ker.cols();
    out.basis = convert<Cyclotomic>(ker);
    if (ker.cols() == 0) {
        for (const auto& s : G.irreps()) out.types.push_back({s.label(), 0});
        return out;
    }
    std::vector<Matrix<K>> images;
    for (size_t w = 0; w < G.order(); ++w) images.push_back(V.w_action(m, w).dense() * ker);
    for (const auto& s : G.irreps()) {
        Matrix<K> P(n, ker.cols());
        for (size_t w = 0; w < G.order(); ++w) {
            Cyclotomic ch = conj(s.character(w));
            if (ch.is_zero()) continue;
            P = P + images[w].scaled(scalar_from<K>(ch));
        }
        out.types.push_back({s.label(), static_cast<int>(rank(P)) / s.dim()});
    }
    return out;
}

}  // namespace rca
