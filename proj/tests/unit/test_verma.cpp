#include "doctest.h"
#include "support/gen.hpp"
#include "rca/verma/verma.hpp"

using namespace rca;

namespace {

template <class K>
Matrix<K> oracle(Verma<K>& V, int m) {
    return V.f_operator(m).transpose() * V.beta0(m);
}

template <class K>
Matrix<K> diag_scalar(size_t n, const K& s) {
    Matrix<K> m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

// grading element on degree m: sum x_i y_i + dim h/2 - sum_s kappa_s s
template <class K>
Matrix<K> grading(Verma<K>& V, int m) {
    size_t n = V.dim(m);
    const auto& G = V.group();
    Matrix<K> H = diag_scalar<K>(n, scalar_from<K>(Cyclotomic(frac(G.dim_h(), 2))));
    if (m > 0)
        for (int i = 0; i < G.dim_h(); ++i) H = H + V.x(m - 1, i).dense() * V.y(m)[i].dense();
    for (size_t s = 0; s < G.reflections().size(); ++s)
        H = H - V.w_action(m, G.reflections()[s].element_index).dense().scaled(V.kappa(s));
    return H;
}

Matrix<Cyclotomic> eval(const Matrix<ParamPoly>& m, const std::vector<Rational>& pt) {
    Matrix<Cyclotomic> r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(pt);
    return r;
}

ParamPoly var(int arity, int i) { return ParamPoly::variable(arity, i); }

std::vector<std::string> small_groups() { return {"Sn:2", "Sn:3", "Cyc:2", "Cyc:3", "DihOdd:1", "DihOdd:2", "DihEven:2", "DihEven:3"}; }

}  // namespace

TEST_CASE("beta0 is the apolarity pairing") {
    auto G = ReflectionGroup::from_spec("DihOdd:1");
    Verma<Cyclotomic> V(G, G->irrep("triv"), {Cyclotomic(0)});
    CHECK(V.beta0(0)(0, 0) == Cyclotomic(1));
    auto B = V.beta0(2);
    const auto& mono = V.monomials(2);
    CHECK(B(mono.find({1, 1}), mono.find({1, 1})) == Cyclotomic(1));
    CHECK(B(mono.find({2, 0}), mono.find({2, 0})) == Cyclotomic(2));
    CHECK(B(mono.find({2, 0}), mono.find({1, 1})).is_zero());
}

TEST_CASE("F-operator recursion matches the Dunkl lowering Gram") {
    for (const auto& spec : small_groups()) {
        auto G = ReflectionGroup::from_spec(spec);
        for (const auto& tau : G->irreps()) {
            Verma<ParamPoly> V(G, tau, symbolic_parameters(*G));
            for (int m = 0; m <= 4; ++m) {
                INFO(spec, " ", tau.label(), " m=", m);
                CHECK(oracle(V, m) == V.gram(m));
                CHECK(V.gram(m).conj_transpose() == V.gram(m));
            }
        }
    }
}

TEST_CASE("cyclic groups with many classes agree at random b points") {
    gen::Rng r(11);
    for (int m : {4, 5}) {
        auto G = ReflectionGroup::cyclic(m);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rational> b;
            for (int j = 1; j < m; ++j) b.push_back(gen::rational(r, 6, 4));
            auto c = cyclic_c_from_b(*G, b);
            for (const auto& tau : G->irreps()) {
                Verma<Cyclotomic> V(G, tau, c);
                for (int n = 0; n <= 5; ++n) CHECK(oracle(V, n) == V.gram(n));
            }
        }
    }
}

TEST_CASE("F at c = 0 is the identity") {
    for (const auto& spec : small_groups()) {
        auto G = ReflectionGroup::from_spec(spec);
        Verma<ParamPoly> V(G, G->irreps()[0], symbolic_parameters(*G));
        std::vector<Rational> zero(G->num_classes() > 2 ? 0 : G->num_classes(), Rational(0));
        for (int m = 0; m <= 3; ++m) CHECK(eval(V.f_operator(m), zero) == Matrix<Cyclotomic>::identity(V.dim(m)));
    }
}

TEST_CASE("even dihedral degree one scalar on the trivial module") {
    for (int d : {2, 3}) {
        auto G = ReflectionGroup::dihedral_even(d);
        Verma<ParamPoly> V(G, G->irrep("triv"), symbolic_parameters(*G));
        ParamPoly expect = ParamPoly(1) - (var(2, 0) + var(2, 1)) * ParamPoly(d);
        CHECK(V.f_operator(1) == diag_scalar<ParamPoly>(2, expect));
    }
}

TEST_CASE("degree-one law on isotypic pieces") {
    for (const auto& spec : small_groups()) {
        auto G = ReflectionGroup::from_spec(spec);
        for (const auto& tau : G->irreps()) {
            Verma<ParamPoly> V(G, tau, symbolic_parameters(*G));
            Verma<Cyclotomic> W(G, tau, std::vector<Cyclotomic>(G->num_classes(), Cyclotomic(0)));
            auto proj = isotypic_projectors(*G, [&](size_t g) { return W.w_action(1, g).dense(); });
            const auto& F = V.f_operator(1);
            for (const auto& [label, P] : proj) {
                if (P.is_zero_matrix()) continue;
                INFO(spec, " ", tau.label(), " sigma=", label);
                auto Pp = convert<ParamPoly>(P);
                ParamPoly scalar = ParamPoly(1) + V.h_weight() - V.h_weight_of(G->irrep(label));
                CHECK(F * Pp == Pp.scaled(scalar));
            }
        }
    }
}

TEST_CASE("grading element acts by h_c + m") {
    for (const auto& spec : small_groups()) {
        auto G = ReflectionGroup::from_spec(spec);
        for (const auto& tau : G->irreps()) {
            Verma<ParamPoly> V(G, tau, symbolic_parameters(*G));
            for (int m = 0; m <= 3; ++m) {
                INFO(spec, " ", tau.label(), " m=", m);
                CHECK(grading(V, m) == diag_scalar<ParamPoly>(V.dim(m), V.h_weight() + ParamPoly(m)));
            }
            // [h, x_i] = x_i as maps degree m -> m+1
            for (int m = 0; m <= 3; ++m)
                for (int i = 0; i < G->dim_h(); ++i) {
                    auto X = V.x(m, i).dense();
                    CHECK(grading(V, m + 1) * X - X * grading(V, m) == X);
                }
        }
    }
}

TEST_CASE("grading identity through degree four for S_3") {
    auto G = ReflectionGroup::symmetric(3);
    Verma<ParamPoly> V(G, G->irrep("2,1"), symbolic_parameters(*G));
    for (int m = 0; m <= 4; ++m) {
        auto X = V.x(m, 0).dense();
        CHECK(grading(V, m + 1) * X - X * grading(V, m) == X);
    }
}

TEST_CASE("W acts by isometries") {
    for (const auto& spec : {"Sn:3", "Cyc:3", "DihOdd:2", "DihEven:2"}) {
        auto G = ReflectionGroup::from_spec(spec);
        for (const auto& tau : G->irreps()) {
            Verma<ParamPoly> V(G, tau, symbolic_parameters(*G));
            for (int m = 0; m <= 3; ++m)
                for (size_t w = 0; w < G->order(); ++w) {
                    auto A = V.w_action(m, w).dense();
                    CHECK(A.transpose() * V.gram(m) * A.conjugate() == V.gram(m));
                }
        }
    }
}

TEST_CASE("sl2 triple for real reflection groups") {
    for (const auto& spec : {"Sn:3", "DihOdd:2", "DihEven:2"}) {
        auto G = ReflectionGroup::from_spec(spec);
        for (const auto& tau : G->irreps()) {
            Verma<ParamPoly> V(G, tau, symbolic_parameters(*G));
            int r = G->dim_h();
            // e = -(1/2) sum x_i x_i', f = (1/2) sum y_i y_i' over a real orthonormal basis
            auto e_op = [&](int m) {
                Matrix<ParamPoly> E(V.dim(m + 2), V.dim(m));
                for (int i = 0; i < r; ++i) E = E + V.x(m + 1, i).dense() * V.x(m, V.real_pair(i)).dense();
                return E.scaled(ParamPoly(Rational(frac(-1, 2))));
            };
            auto f_op = [&](int m) {
                Matrix<ParamPoly> F(V.dim(m - 2), V.dim(m));
                for (int i = 0; i < r; ++i) F = F + V.y(m - 1)[i].dense() * V.y(m)[V.real_pair(i)].dense();
                return F.scaled(ParamPoly(Rational(frac(1, 2))));
            };
            for (int m = 2; m <= 4; ++m) {
                INFO(spec, " ", tau.label(), " m=", m);
                // [e, f] = h on degree m
                CHECK(e_op(m - 2) * f_op(m) - f_op(m + 2) * e_op(m) == grading(V, m));
                // [h, e] = 2e
                CHECK(grading(V, m + 2) * e_op(m) - e_op(m) * grading(V, m) == e_op(m).scaled(ParamPoly(2)));
                // [h, f] = -2f
                CHECK(grading(V, m - 2) * f_op(m) - f_op(m) * grading(V, m) == f_op(m).scaled(ParamPoly(-2)));
            }
        }
    }
}

TEST_CASE("rank one examples") {
    // S_2 on C^2: y_1 (x_1 - x_2) = 1 - 2c
    auto S2 = ReflectionGroup::symmetric(2);
    Verma<ParamPoly> V(S2, S2->irrep("2"), symbolic_parameters(*S2));
    auto y1 = V.y(1)[0].dense();
    const auto& mono = V.monomials(1);
    ParamPoly c = var(1, 0);
    CHECK(y1(0, mono.find({1, 0})) - y1(0, mono.find({0, 1})) == ParamPoly(1) - c * ParamPoly(2));
    CHECK(V.y(0).empty());

    // Z/2 with b_1 = 2c: a_1 = 1 - 2c, a_2 = 2 a_1
    auto Z2 = ReflectionGroup::cyclic(2);
    Verma<ParamPoly> R(Z2, Z2->irreps()[0], symbolic_parameters(*Z2));
    ParamPoly b = var(1, 0);
    CHECK(R.gram(1)(0, 0) == ParamPoly(1) - b);
    CHECK(R.gram(2)(0, 0) == (ParamPoly(1) - b) * ParamPoly(2));
    CHECK(R.f_operator(2)(0, 0) == ParamPoly(1) - b);
}

TEST_CASE("cyclic Gram reproduces the a_n recursion") {
    gen::Rng r(5);
    for (int m = 2; m <= 6; ++m) {
        auto G = ReflectionGroup::cyclic(m);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rational> b;
            for (int j = 1; j < m; ++j) b.push_back(gen::rational(r, 8, 3));
            auto c = cyclic_c_from_b(*G, b);
            for (int n = 1; n < m; ++n) CHECK(cyclic_b(*G, c, n) == Cyclotomic(b[n - 1]));
            Verma<Cyclotomic> V(G, G->irreps()[0], c);
            Cyclotomic a(1);
            for (int n = 1; n <= 2 * m; ++n) {
                Rational bn = n % m == 0 ? Rational(0) : b[n % m - 1];
                a *= Cyclotomic(Rational(n) - bn);
                CHECK(V.gram(n)(0, 0) == a);
            }
        }
    }
}

TEST_CASE("h weights") {
    for (int n = 2; n <= 5; ++n) {
        auto G = ReflectionGroup::symmetric(n);
        Verma<ParamPoly> V(G, G->irreps()[0], symbolic_parameters(*G));
        ParamPoly c = var(1, 0);
        ParamPoly expect = ParamPoly(Rational(frac(n, 2))) - c * ParamPoly(Rational(frac(n * (n - 1), 2)));
        CHECK(V.h_weight() == expect);
        // on the reflection representation C^{n-1}: |S| (1/h - c)
        ParamPoly refl = ParamPoly(Rational(frac(n * (n - 1), 2))) * (ParamPoly(Rational(frac(1, n))) - c);
        CHECK(V.h_weight() - ParamPoly(Rational(frac(1, 2))) == refl);
        for (const auto& tau : G->irreps())
            CHECK(Verma<ParamPoly>(G, tau, symbolic_parameters(*G)).h_weight() ==
                  ParamPoly(Rational(frac(n, 2))) - c * ParamPoly(Rational(tau.partition->content())));
    }
    auto D = ReflectionGroup::dihedral_even(3);
    Verma<Cyclotomic> W(D, D->irrep("tau1"), {Cyclotomic(0), Cyclotomic(0)});
    CHECK(W.h_weight() == Cyclotomic(1));
}

TEST_CASE("character twist identifies Grams") {
    // Gram(chi (x) tau, c) = Gram(tau, chi(s) c_s)
    for (const auto& spec : {"DihOdd:2", "DihEven:2", "DihEven:3", "Sn:3"}) {
        auto G = ReflectionGroup::from_spec(spec);
        auto cs = symbolic_parameters(*G);
        for (const auto& chi : G->irreps()) {
            if (chi.dim() != 1) continue;
            std::vector<ParamPoly> twisted = cs;
            for (const auto& r : G->reflections())
                twisted[r.class_index] = cs[r.class_index] * ParamPoly(chi.character(r.element_index));
            for (const auto& tau : G->irreps()) {
                Irrep ct = twist(*G, chi, tau, chi.label() + "*" + tau.label());
                Verma<ParamPoly> A(G, ct, cs), B(G, tau, twisted);
                for (int m = 0; m <= 3; ++m) CHECK(A.gram(m) == B.gram(m));
            }
        }
    }
    gen::Rng r(3);
    for (int m : {3, 4}) {
        auto G = ReflectionGroup::cyclic(m);
        std::vector<Rational> b;
        for (int j = 1; j < m; ++j) b.push_back(gen::rational(r, 5, 4));
        auto c = cyclic_c_from_b(*G, b);
        for (const auto& chi : G->irreps()) {
            std::vector<Cyclotomic> twisted = c;
            for (const auto& rd : G->reflections()) twisted[rd.class_index] *= chi.character(rd.element_index);
            for (const auto& tau : G->irreps()) {
                Irrep ct = twist(*G, chi, tau, "t");
                Verma<Cyclotomic> A(G, ct, c), B(G, tau, twisted);
                for (int n = 0; n <= 2 * m; ++n) CHECK(A.gram(n) == B.gram(n));
            }
        }
    }
}

TEST_CASE("singular vectors") {
    auto G = ReflectionGroup::symmetric(3);
    auto find = [](const SingularSpace& s, const std::string& l) {
        for (const auto& [label, k] : s.types)
            if (label == l) return k;
        return -1;
    };
    {
        Verma<Rational> V(G, G->irrep("3"), {frac(1, 3)});
        auto s = singular_vectors(V, 1);
        CHECK(s.dimension == 2);
        CHECK(find(s, "2,1") == 1);
        CHECK(find(s, "3") == 0);
    }
    {
        Verma<Rational> V(G, G->irrep("3"), {frac(1, 2)});
        for (int m = 1; m <= 2; ++m) CHECK(singular_vectors(V, m).dimension == 0);
        auto s = singular_vectors(V, 3);
        CHECK(s.dimension == 1);
        CHECK(find(s, "1,1,1") == 1);
    }
    for (const auto& tau : G->irreps()) {
        Verma<Rational> V(G, tau, {frac(1, 1000007)});
        for (int m = 1; m <= 4; ++m) CHECK(singular_vectors(V, m).dimension == 0);
    }
    // degree one: nonzero exactly when some sigma has h_c(sigma) = h_c(tau) + 1
    for (const auto& spec : {"Sn:3", "DihOdd:2", "DihEven:2"}) {
        auto H = ReflectionGroup::from_spec(spec);
        for (const auto& tau : H->irreps())
            for (int k = -6; k <= 6; ++k) {
                std::vector<Cyclotomic> c(H->num_classes(), Cyclotomic(frac(k, 6)));
                Verma<Cyclotomic> V(H, tau, c);
                auto s = singular_vectors(V, 1);
                int predicted = 0;
                Verma<Cyclotomic> Z(H, tau, std::vector<Cyclotomic>(H->num_classes(), Cyclotomic(0)));
                auto proj = isotypic_projectors(*H, [&](size_t g) { return Z.w_action(1, g).dense(); });
                for (const auto& [label, P] : proj) {
                    const auto& sig = H->irrep(label);
                    if (V.h_weight_of(sig) - V.h_weight() == Cyclotomic(1))
                        predicted += static_cast<int>(rank(P));
                }
                CHECK(static_cast<int>(s.dimension) == predicted);
            }
    }
}

TEST_CASE("Gaussian form") {
    auto S2 = ReflectionGroup::symmetric(2);
    {
        Verma<Rational> V(S2, S2->irrep("2"), {Rational(0)});
        auto Gm = V.gaussian_gram(2);
        CHECK(Gm(0, 0) == Rational(1));
        size_t x1sq = V.offset(2) + V.monomials(2).find({2, 0});
        CHECK(Gm(x1sq, 0) != Rational(0));
    }
    for (const auto& spec : {"Sn:2", "Sn:3", "DihOdd:1", "DihEven:2"}) {
        auto G = ReflectionGroup::from_spec(spec);
        for (const auto& tau : G->irreps()) {
            Verma<ParamPoly> V(G, tau, symbolic_parameters(*G));
            int D = 4;
            auto Gm = V.gaussian_gram(D);
            size_t N = V.truncation_dim(D), M = V.truncation_dim(D - 1);
            // degree zero block is the tau form
            for (int i = 0; i < tau.dim(); ++i)
                for (int j = 0; j < tau.dim(); ++j) CHECK(Gm(i, j) == ParamPoly(tau.form()(i, j)));
            for (int i = 0; i < G->dim_h(); ++i) {
                // multiplication by x_i and Dunkl y_i on the truncation
                Matrix<ParamPoly> X(N, N), Xc(N, N), Y(N, N), Yc(N, N);
                for (int m = 0; m < D; ++m) {
                    auto a = V.x(m, i), ac = V.x(m, V.real_pair(i));
                    for (size_t j = 0; j < a.cols.size(); ++j) {
                        for (const auto& [row, v] : a.cols[j]) X(V.offset(m + 1) + row, V.offset(m) + j) = v;
                        for (const auto& [row, v] : ac.cols[j]) Xc(V.offset(m + 1) + row, V.offset(m) + j) = v;
                    }
                }
                for (int m = 1; m <= D; ++m) {
                    const auto& yy = V.y(m)[i];
                    const auto& yc = V.y(m)[V.real_pair(i)];
                    for (size_t j = 0; j < yy.cols.size(); ++j) {
                        for (const auto& [row, v] : yy.cols[j]) Y(V.offset(m - 1) + row, V.offset(m) + j) = v;
                        for (const auto& [row, v] : yc.cols[j]) Yc(V.offset(m - 1) + row, V.offset(m) + j) = v;
                    }
                }
                auto lhs = X.transpose() * Gm, rhs = Gm * Xc.conjugate();
                // gamma((x_i - y_i') v, v') = gamma(v, y_i v')
                auto ylhs = (X - Yc).transpose() * Gm, yrhs = Gm * Y.conjugate();
                bool selfadj = true, twisted = true;
                for (size_t a = 0; a < M; ++a)
                    for (size_t b = 0; b < M; ++b) selfadj &= lhs(a, b) == rhs(a, b);
                for (size_t a = 0; a < M; ++a)
                    for (size_t b = 0; b < N; ++b) twisted &= ylhs(a, b) == yrhs(a, b);
                INFO(std::string(spec), " ", tau.label(), " i=", i);
                CHECK(selfadj);
                CHECK(twisted);
            }
        }
    }
    // kernel dimensions agree with the Verma form at c = 1/2
    for (const auto& spec : {"Sn:2", "Sn:3"}) {
        auto G = ReflectionGroup::from_spec(spec);
        Verma<Rational> V(G, G->irreps()[0], {frac(1, 2)});
        int D = 5;
        auto Gm = V.gaussian_gram(D);
        size_t kb = 0;
        for (int m = 0; m <= D; ++m) kb += V.dim(m) - rank(V.gram(m));
        CHECK(Gm.rows() - rank(Gm) == kb);
        CHECK(kb > 0);
    }
}
