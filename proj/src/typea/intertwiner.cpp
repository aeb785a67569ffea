#include "rca/typea/intertwiner.hpp"

#include <map>

#include "rca/scalars/linalg.hpp"
#include "rca/verma/monomials.hpp"

namespace rca {

json IntertwinerReport::to_json() const {
    return {{"n", n},
            {"kappa", to_string(kappa)},
            {"max_degree", max_degree},
            {"vacuum_z1", to_string(vacuum_z1)},
            {"psi_phi", psi_phi},
            {"z_triangular", z_triangular},
            {"eigenvectors_map", eigenvectors_map},
            {"sigma_square", sigma_square},
            {"sigma_self_adjoint", sigma_self_adjoint},
            {"phi_adjoint", phi_adjoint},
            {"eigenvectors", eigenvectors},
            {"sigma_checks", sigma_checks},
            {"skipped", skipped},
            {"ok", ok()}};
}

namespace {

using Mat = Matrix<Rational>;
using Vec = std::vector<Rational>;

struct Module {
    int n;
    Rational kappa;
    std::vector<MonomialBasis> B;

    Module(int n_, Rational k, int top) : n(n_), kappa(std::move(k)) {
        for (int d = 0; d <= top; ++d) B.emplace_back(n, d);
    }
    size_t dim(int d) const { return B[d].size(); }

    Mat swap(int d, int i, int j) const {
        Mat S(dim(d), dim(d));
        for (size_t a = 0; a < dim(d); ++a) {
            Exponents mu = B[d][a];
            std::swap(mu[i], mu[j]);
            S(B[d].find(mu), a) = 1;
        }
        return S;
    }
    Mat x(int d, int i) const {
        Mat X(dim(d + 1), dim(d));
        for (size_t a = 0; a < dim(d); ++a) {
            Exponents mu = B[d][a];
            mu[i] += 1;
            X(B[d + 1].find(mu), a) = 1;
        }
        return X;
    }
    // degree d -> d - 1
    Mat y(int d, int i) const {
        Mat Y(dim(d - 1), dim(d));
        for (size_t a = 0; a < dim(d); ++a) {
            const Exponents& mu = B[d][a];
            if (mu[i] > 0) {
                Exponents nu = mu;
                nu[i] -= 1;
                Y(B[d - 1].find(nu), a) += kappa * mu[i];
            }
            for (int k = 0; k < n; ++k) {
                if (k == i || mu[i] == mu[k]) continue;
                // x^rest (x_i^p x_k^q - x_i^q x_k^p) / (x_i - x_k)
                int p = mu[i], q = mu[k], lo = std::min(p, q), e = std::abs(p - q);
                Rational sgn = p > q ? 1 : -1;
                for (int t = 0; t < e; ++t) {
                    Exponents nu = mu;
                    nu[i] = lo + (p > q ? e - 1 - t : t);
                    nu[k] = lo + (p > q ? t : e - 1 - t);
                    Y(B[d - 1].find(nu), a) += sgn;
                }
            }
        }
        return Y;
    }
    Mat z(int d, int i) const {
        Mat Z = y(d + 1, i) * x(d, i);
        for (int j = 0; j < i; ++j) Z = Z - swap(d, i, j);
        return Z;
    }
};

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}
Vec scale(const Vec& a, const Rational& s) {
    Vec r = a;
    for (auto& e : r) e *= s;
    return r;
}
Rational form(const Mat& G, const Vec& u, const Vec& w) {
    Rational s = 0;
    auto Gw = G.apply(w);
    for (size_t k = 0; k < u.size(); ++k) s += u[k] * Gw[k];
    return s;
}

std::string weight_str(const Vec& a) {
    std::string s = "(";
    for (size_t k = 0; k < a.size(); ++k) s += (k ? ", " : "") + to_string(a[k]);
    return s + ")";
}

}  // namespace

IntertwinerReport intertwiner_check(int n, const Rational& kappa, int max_degree) {
    IntertwinerReport rep;
    rep.n = n;
    rep.kappa = kappa;
    rep.max_degree = max_degree;
    Module M(n, kappa, max_degree + 1);

    // contravariant form: beta(x_k u, w) = beta(u, y_k w), beta(1, 1) = 1
    std::vector<Mat> G{Mat::identity(1)};
    for (int d = 1; d <= max_degree + 1; ++d) {
        Mat Gd(M.dim(d), M.dim(d));
        std::vector<Mat> ys;
        for (int k = 0; k < n; ++k) ys.push_back(M.y(d, k));
        for (size_t a = 0; a < M.dim(d); ++a) {
            int k = 0;
            while (M.B[d][a][k] == 0) ++k;
            Exponents nu = M.B[d][a];
            nu[k] -= 1;
            size_t pa = M.B[d - 1].find(nu);
            for (size_t b = 0; b < M.dim(d); ++b) {
                Rational s = 0;
                for (size_t q = 0; q < M.dim(d - 1); ++q)
                    if (G[d - 1](pa, q) != 0 && ys[k](q, b) != 0) s += G[d - 1](pa, q) * ys[k](q, b);
                Gd(a, b) = s;
            }
        }
        G.push_back(std::move(Gd));
    }

    for (int d = 0; d <= max_degree; ++d) {
        size_t N = M.dim(d);
        Mat Phi = Mat::identity(N), Psi = Mat::identity(M.dim(d + 1));
        for (int i = 0; i + 1 < n; ++i) Phi = M.swap(d, i, i + 1) * Phi;
        Phi = M.x(d, n - 1) * Phi;
        for (int i = n - 2; i >= 0; --i) Psi = M.swap(d + 1, i, i + 1) * Psi;
        Psi = M.y(d + 1, 0) * Psi;
        std::vector<Mat> Z;
        for (int i = 0; i < n; ++i) Z.push_back(M.z(d, i));
        Mat PP = Psi * Phi;
        if (PP != Z[0]) rep.psi_phi = false;
        if (d == 0) rep.vacuum_z1 = PP(0, 0);
        if (d <= 2 && Phi.transpose() * G[d + 1] != G[d] * Psi) rep.phi_adjoint = false;

        // triangular order: a before b whenever some z_i has a nonzero (a, b) entry, a != b
        std::vector<std::vector<size_t>> succ(N);
        std::vector<int> indeg(N, 0);
        for (size_t a = 0; a < N; ++a)
            for (size_t b = 0; b < N; ++b) {
                if (a == b) continue;
                bool nz = false;
                for (const auto& z : Z) nz = nz || z(a, b) != 0;
                if (nz) {
                    succ[b].push_back(a);
                    ++indeg[a];
                }
            }
        std::vector<size_t> order;
        for (size_t a = 0; a < N; ++a)
            if (!indeg[a]) order.push_back(a);
        for (size_t h = 0; h < order.size(); ++h)
            for (size_t a : succ[order[h]])
                if (--indeg[a] == 0) order.push_back(a);
        if (order.size() != N) {
            rep.z_triangular = false;
            continue;
        }
        std::map<Vec, int> weights;
        for (size_t a = 0; a < N; ++a) {
            Vec w;
            for (const auto& z : Z) w.push_back(z(a, a));
            weights[w] += 1;
        }
        // simultaneous eigenvectors with their weights
        std::vector<std::pair<Vec, Vec>> eig;
        for (const auto& [w, mult] : weights) {
            Mat S(N * n, N);
            for (int i = 0; i < n; ++i)
                for (size_t a = 0; a < N; ++a)
                    for (size_t b = 0; b < N; ++b) S(i * N + a, b) = Z[i](a, b) - (a == b ? w[i] : Rational(0));
            Mat K = nullspace(S);
            if (static_cast<int>(K.cols()) != mult) rep.z_triangular = false;
            for (size_t c = 0; c < K.cols(); ++c) {
                Vec f(N);
                for (size_t a = 0; a < N; ++a) f[a] = K(a, c);
                eig.push_back({f, w});
            }
        }
        rep.eigenvectors += static_cast<long>(eig.size());

        for (int i = 0; i + 1 < n; ++i) {
            Mat S = M.swap(d, i, i + 1);
            auto sigma = [&](const Vec& f, const Rational& diff) { return sub(S.apply(f), scale(f, 1 / diff)); };
            std::vector<std::pair<size_t, Vec>> images;  // eigenvector index, sigma_i f
            for (size_t e = 0; e < eig.size(); ++e) {
                const auto& [f, w] = eig[e];
                Rational diff = w[i] - w[i + 1];
                if (diff == 0) {
                    rep.skipped.push_back("degree " + std::to_string(d) + ", i = " + std::to_string(i + 1) + ", weight " +
                                          weight_str(w));
                    continue;
                }
                Vec g = sigma(f, diff);
                Vec sw = w;
                std::swap(sw[i], sw[i + 1]);
                for (int k = 0; k < n; ++k)
                    if (Z[k].apply(g) != scale(g, sw[k])) rep.eigenvectors_map = false;
                Vec g2 = sigma(g, -diff);
                if (sub(g2, scale(f, (diff * diff - 1) / (diff * diff))) != Vec(N, Rational(0))) rep.sigma_square = false;
                ++rep.sigma_checks;
                images.push_back({e, g});
            }
            if (d <= 2)
                for (const auto& [e1, g1] : images)
                    for (const auto& [e2, g2] : images)
                        if (form(G[d], g1, eig[e2].first) != form(G[d], eig[e1].first, g2)) rep.sigma_self_adjoint = false;
        }
    }
    return rep;
}

}  // namespace rca
