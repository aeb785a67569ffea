#include "doctest.h"
#include "support/gen.hpp"
#include "rca/unitarity/ldl.hpp"
#include "rca/unitarity/symmetric_reduction.hpp"
#include "rca/unitarity/unitarity.hpp"
#include "rca/verma/verma.hpp"

using namespace rca;

namespace {

GroupPtr grp(const std::string& s) { return ReflectionGroup::from_spec(s); }

Rational q(long p, long r) { return frac(p, r); }

bool same_verdict(const Verdict& a, const Verdict& b) {
    if (a.kind != b.kind) return false;
    if (a.non_unitary()) return a.witness_degree == b.witness_degree;
    return a.kernel_dims == b.kernel_dims;
}

std::vector<Rational> line(long lo, long hi, long den) {
    std::vector<Rational> out;
    for (long k = lo; k <= hi; ++k) out.push_back(q(k, den));
    return out;
}

}  // namespace

TEST_CASE("congruence reconstructs the form") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = static_cast<size_t>(rng.range(1, 6));
        Matrix<Rational> A(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                Rational x = rng.range(0, 3) == 0 ? Rational(0) : gen::rational(rng, 4, 3);
                A(i, j) = x;
                A(j, i) = x;
            }
        auto cg = congruence(A, true, false);
        auto D = cg.basis * A * cg.basis.transpose();
        size_t zeros = 0, neg = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j) CHECK(sgn(D(i, j)) == 0);
        for (size_t i = 0; i < n; ++i) {
            zeros += sgn(D(i, i)) == 0;
            neg += sgn(D(i, i)) < 0;
        }
        CHECK(rank(cg.basis) == n);
        CHECK(zeros == cg.zeros);
        CHECK(neg == cg.negatives);
        CHECK(n - zeros == rank(A));
    }
}

TEST_CASE("congruence handles a zero diagonal and cyclotomic entries") {
    Matrix<Rational> A(2, 2);
    A(0, 1) = 1;
    A(1, 0) = 1;
    auto cg = congruence(A, true, false);
    CHECK(cg.negatives == 1);
    REQUIRE(cg.witness);
    CHECK(sgn(form_norm(A, *cg.witness)) < 0);

    gen::Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<Cyclotomic> H(3, 3);
        for (size_t i = 0; i < 3; ++i) {
            H(i, i) = Cyclotomic(gen::rational(rng));
            for (size_t j = i + 1; j < 3; ++j) {
                H(i, j) = gen::cyclotomic(rng, 5, 2);
                H(j, i) = conj(H(i, j));
            }
        }
        auto c = congruence(H, true, false);
        auto D = c.basis * H * c.basis.conj_transpose();
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                if (i != j) CHECK(D(i, j).is_zero());
    }
}

TEST_CASE("certify_point examples") {
    auto s2 = grp("Sn:2");
    const auto& triv = s2->irrep("2");
    auto v = certify_point(s2, triv, {q(1, 4)}, 8);
    CHECK(v.kind == VerdictKind::ConsistentUpTo);
    CHECK(v.checked_degree == 8);
    CHECK(v.kernel_dims == std::vector<long>(9, 0));

    v = certify_point(s2, triv, {q(3, 4)}, 8);
    CHECK(v.non_unitary());
    CHECK(v.witness_degree == 1);
    CHECK(sign_of(v.witness_norm) < 0);

    // on C^2 the radical at c = 1/2 is generated by x_1 - x_2
    v = certify_point(s2, triv, {q(1, 2)}, 8);
    REQUIRE(v.kind == VerdictKind::ConsistentUpTo);
    for (int m = 0; m <= 8; ++m) CHECK(v.kernel_dims[m] == m);

    // rank-one model: kernel one-dimensional in every positive degree
    auto z2 = grp("Cyc:2");
    v = certify_point(z2, z2->irrep("0"), {Rational(1)}, 8);
    REQUIRE(v.kind == VerdictKind::ConsistentUpTo);
    CHECK(v.kernel_dims[0] == 0);
    for (int m = 1; m <= 8; ++m) CHECK(v.kernel_dims[m] == 1);
}

TEST_CASE("S_3 standard module on the twelfths") {
    auto s3 = grp("Sn:3");
    const auto& tau = s3->irrep("2,1");
    std::vector<std::vector<Rational>> grid;
    for (const auto& c : line(-12, 12, 12)) grid.push_back({c});
    auto res = sweep(s3, tau, grid, 6);
    for (const auto& e : res) {
        REQUIRE(e.verdict);
        Rational c = e.point[0];
        bool outside = c > q(1, 3) || c < q(-1, 3);
        CHECK_MESSAGE(e.verdict->non_unitary() == outside, to_string(c));
    }
}

TEST_CASE("c = 0 is always consistent") {
    for (const char* spec : {"Sn:3", "Sn:4", "Cyc:3", "DihOdd:2", "DihEven:3"}) {
        auto g = grp(spec);
        size_t arity = g->kind() == GroupKind::Cyclic ? g->param() - 1 : g->num_classes();
        for (const auto& tau : g->irreps()) {
            auto v = certify_point(g, tau, std::vector<Rational>(arity, Rational(0)), 4);
            CHECK(v.kind == VerdictKind::ConsistentUpTo);
            for (long k : v.kernel_dims) CHECK(k == 0);
        }
    }
}

TEST_CASE("cyclic Z/3 sweep agrees with the rank-one predictor") {
    auto z3 = grp("Cyc:3");
    std::vector<std::vector<Rational>> grid;
    for (const auto& b1 : line(-2, 2, 1))
        for (const auto& b2 : line(-2, 2, 1)) grid.push_back({b1 * 3 / 2, b2 * 3 / 2});
    for (const auto& tau : {z3->irrep("0")}) {
        auto res = sweep(z3, tau, grid, 12);
        for (const auto& e : res) {
            REQUIRE(e.verdict);
            CHECK(e.verdict->non_unitary() == !predictor_rank1(3, e.point));
        }
    }
}

TEST_CASE("isotypic reduction agrees with the full Gram") {
    for (auto [spec, D] : {std::pair<const char*, int>{"Sn:2", 5}, {"Sn:3", 5}, {"Sn:4", 4}}) {
        auto g = grp(spec);
        for (const auto& tau : g->irreps())
            for (long k : {-7, -4, -3, -1, 0, 1, 2, 3, 5, 6, 9}) {
                Rational c = q(k, 12);
                auto a = certify_point(g, tau, {c}, D);
                auto b = certify_point_generic(g, tau, {c}, D);
                INFO(std::string(spec), " ", tau.label(), " c=", to_string(c));
                CHECK(same_verdict(a, b));
            }
    }
}

TEST_CASE("reduced blocks carry the signature of the full Gram") {
    auto g = grp("Sn:4");
    for (const auto& tau : g->irreps()) {
        SymmetricReduction red(g, tau, 4);
        red.interpolate();
        for (Rational c : {q(1, 3), q(-2, 5), q(7, 4)}) {
            Verma<Rational> V(g, tau, {c});
            auto blocks = red.evaluate(c);
            auto direct = red.evaluate_point(c);
            for (int m = 0; m <= 4; ++m) {
                size_t neg = 0, zer = 0, dim = 0;
                for (size_t b = 0; b < blocks.size(); ++b) {
                    const auto& info = red.blocks()[b];
                    if (info.degree != m) continue;
                    CHECK(blocks[b] == direct[b]);
                    auto cg = congruence(blocks[b], false, false);
                    neg += cg.negatives * info.sigma_dim;
                    zer += cg.zeros * info.sigma_dim;
                    dim += static_cast<size_t>(info.mult * info.sigma_dim);
                }
                auto full = congruence(V.gram(m), false, false);
                CHECK(dim == V.dim(m));
                CHECK(neg == full.negatives);
                CHECK(zer == full.zeros);
            }
        }
    }
}

TEST_CASE("lifted witnesses have the norm the full Gram assigns") {
    auto g = grp("Sn:3");
    for (const auto& tau : g->irreps())
        for (Rational c : {q(1, 2), q(-1, 2), q(3, 4)}) {
            auto v = certify_point(g, tau, {c}, 4);
            if (!v.non_unitary()) continue;
            Verma<Rational> V(g, tau, {c});
            std::vector<Rational> w;
            for (const auto& x : v.witness) w.push_back(x.rational_part());
            Rational direct = form_norm(V.gram(v.witness_degree), w);
            CHECK(direct == v.witness_norm.rational_part());
            CHECK(sgn(direct) < 0);
        }
}

TEST_CASE("monotone consistency") {
    auto g = grp("Sn:3");
    for (const auto& tau : g->irreps())
        for (long k : {-9, -5, 5, 9}) {
            Rational c = q(k, 12);
            auto v = certify_point(g, tau, {c}, 6);
            if (!v.non_unitary()) continue;
            for (int D = v.witness_degree; D <= 7; ++D) {
                auto w = certify_point(g, tau, {c}, D);
                CHECK(w.non_unitary());
                CHECK(w.witness_degree == v.witness_degree);
            }
        }
    auto d = grp("DihOdd:1");
    auto v = certify_point(d, d->irrep("triv"), {q(1, 2)}, 5);
    REQUIRE(v.non_unitary());
    for (int D = v.witness_degree; D <= 6; ++D) CHECK(certify_point(d, d->irrep("triv"), {q(1, 2)}, D).witness_degree == v.witness_degree);
}

TEST_CASE("character twist equivariance") {
    auto s4 = grp("Sn:4");
    for (const auto& tau : s4->irreps()) {
        const auto& dual = s4->irrep(tau.partition->conjugate().str());
        for (long k : {-5, -3, -1, 2, 3, 4}) {
            Rational c = q(k, 12);
            CHECK(same_verdict(certify_point(s4, tau, {c}, 4), certify_point(s4, dual, {-c}, 4)));
        }
    }
    auto d = grp("DihEven:2");
    const auto& triv = d->irrep("triv");
    std::vector<std::pair<std::string, std::vector<int>>> chars{{"eps1", {-1, 1}}, {"eps2", {1, -1}}, {"sign", {-1, -1}}};
    for (const auto& [label, s] : chars)
        for (auto [a, b] : {std::pair<long, long>{1, 1}, {3, -1}, {-2, 5}, {6, 0}}) {
            Rational c1 = q(a, 6), c2 = q(b, 6);
            auto lhs = certify_point(d, d->irrep(label), {c1, c2}, 4);
            auto rhs = certify_point(d, triv, {c1 * s[0], c2 * s[1]}, 4);
            CHECK(same_verdict(lhs, rhs));
        }
}

TEST_CASE("necessary conditions") {
    auto s4 = grp("Sn:4");
    auto nc = necessary_conditions(s4, s4->irrep("4"), {q(1, 3)});
    REQUIRE(nc.hc_nonneg);
    CHECK_FALSE(*nc.hc_nonneg);
    nc = necessary_conditions(s4, s4->irrep("4"), {q(1, 4)});
    CHECK(*nc.hc_nonneg);

    auto s3 = grp("Sn:3");
    // at c = 1/2 the failing degree-one type is the sign; at c = -1/2 it is the trivial one
    nc = necessary_conditions(s3, s3->irrep("2,1"), {q(1, 2)});
    for (const auto& d : nc.degree1) {
        CHECK(d.satisfied == (d.sigma != "1,1,1"));
        if (d.sigma == "1,1,1") CHECK(d.value == Cyclotomic(q(-1, 2)));
    }
    nc = necessary_conditions(s3, s3->irrep("2,1"), {q(-1, 2)});
    for (const auto& d : nc.degree1) CHECK(d.satisfied == (d.sigma != "3"));

    for (const char* spec : {"Sn:3", "Sn:4", "DihOdd:2", "DihEven:2", "Cyc:3"}) {
        auto g = grp(spec);
        size_t arity = g->kind() == GroupKind::Cyclic ? g->param() - 1 : g->num_classes();
        for (const auto& tau : g->irreps()) {
            CHECK(necessary_conditions(g, tau, std::vector<Rational>(arity, Rational(0))).all_satisfied());
            for (long k : {-9, -4, 3, 7}) {
                std::vector<Rational> c(arity, q(k, 12));
                if (arity == 2 && g->kind() != GroupKind::Cyclic) c[1] = q(-k, 24);
                auto n = necessary_conditions(g, tau, c);
                if (n.all_satisfied()) continue;
                auto v = certify_point(g, tau, c, 3);
                INFO(std::string(spec), " ", tau.label(), " k=", k);
                REQUIRE(v.non_unitary());
                bool deg1 = false;
                for (const auto& d : n.degree1) deg1 = deg1 || !d.satisfied;
                if (deg1) CHECK(v.witness_degree <= 1);
                else CHECK(v.witness_degree <= 2);
            }
        }
    }
}

TEST_CASE("predictors") {
    CHECK(predictor_rank1(2, {Rational(1)}));
    CHECK_FALSE(predictor_rank1(2, {q(3, 2)}));
    CHECK(predictor_rank1(3, {Rational(0), Rational(0)}));
    CHECK(predictor_rank1(3, {Rational(1), Rational(5)}));
    CHECK_FALSE(predictor_rank1(3, {q(1, 2), Rational(5)}));

    auto o2 = grp("DihOdd:2");
    CHECK(predictor_dihedral(*o2, o2->irrep("tau1")).str() == "[-1/5, 1/5]");
    CHECK(predictor_dihedral(*o2, o2->irrep("triv")).contains({q(1, 5)}));
    CHECK_FALSE(predictor_dihedral(*o2, o2->irrep("triv")).contains({q(1, 4)}));
    auto e2 = grp("DihEven:2");
    auto l1 = predictor_dihedral(*e2, e2->irrep("tau1"));
    CHECK(l1.contains({q(1, 4), q(1, 4)}));
    CHECK(l1.contains({q(1, 2), Rational(0)}));
    CHECK_FALSE(l1.contains({q(1, 2), q(1, 12)}));
    auto e3 = grp("DihEven:3");
    CHECK(predictor_dihedral(*e3, e3->irrep("triv")).contains({q(1, 2), q(-1, 3)}));
    CHECK_THROWS_AS(predictor_dihedral(*grp("Sn:3"), grp("Sn:3")->irrep("3")), UnsupportedIrrep);

    auto s4 = grp("Sn:4");
    CHECK(predictor_coxeter_exterior(*s4, 0).str() == "(-inf, 1/4]");
    CHECK(predictor_coxeter_exterior(*s4, 3).str() == "[-1/4, +inf)");
    CHECK(predictor_coxeter_exterior(*s4, 1).str() == "[-1/4, 1/4]");
    CHECK(exterior_power_label(*s4, 2) == "2,1,1");
    CHECK(predictor_coxeter_exterior(*o2, 1).str() == "[-1/5, 1/5]");
}

TEST_CASE("exterior-power predictor agrees with sweeps") {
    for (const char* spec : {"Sn:3", "Sn:4", "DihOdd:1", "DihOdd:2"}) {
        auto g = grp(spec);
        int r = g->kind() == GroupKind::Symmetric ? g->param() - 1 : 2;
        for (int i = 0; i <= r; ++i) {
            const auto& tau = g->irrep(exterior_power_label(*g, i));
            auto locus = predictor_coxeter_exterior(*g, i);
            std::vector<std::vector<Rational>> grid;
            for (const auto& c : farey_grid(Rational(-1), Rational(1), 6)) grid.push_back({c});
            for (const auto& e : sweep(g, tau, grid, 4)) {
                REQUIRE(e.verdict);
                INFO(std::string(spec), " i=", i, " c=", to_string(e.point[0]));
                CHECK(e.verdict->non_unitary() == !locus.contains(e.point));
            }
        }
    }
}

TEST_CASE("Macdonald-Mehta pole orders") {
    MMData s4{{2, 3, 4}};
    CHECK(mm_pole_order(s4, q(1, 4)) == 1);
    CHECK(mm_pole_order(s4, Rational(-1)) == 0);
    CHECK(mm_pole_order(s4, q(1, 5)) == 0);
    CHECK(mm_pole_order(s4, q(1, 2)) == 2);
    CHECK(mm_pole_order(s4, Rational(1)) == 2);
    for (int n = 2; n <= 6; ++n) {
        MMData d;
        for (int k = 2; k <= n; ++k) d.degrees.push_back(k);
        for (int m = 2; m <= n; ++m)
            for (int r = 1; r < m; ++r) {
                if (std::gcd(r, m) != 1) continue;
                int hits = 0;
                for (int k = 2; k <= n; ++k) hits += (k * r) % m == 0;
                CHECK(mm_pole_order(d, q(r, m)) == hits);
                CHECK(hits == n / m);
            }
    }
}

TEST_CASE("sweep keeps grid order and reports errors per point") {
    auto s3 = grp("Sn:3");
    std::vector<std::vector<Rational>> grid{{q(1, 2)}, {q(1, 2), Rational(0)}, {Rational(0)}};
    auto res = sweep(s3, s3->irrep("3"), grid, 3, 2);
    REQUIRE(res.size() == 3);
    CHECK(res[0].verdict);
    CHECK_FALSE(res[1].verdict);
    CHECK_FALSE(res[1].error.empty());
    CHECK(res[2].verdict);
    CHECK(res[2].point == grid[2]);
    CHECK(res[0].verdict->to_json()["kind"] == "NonUnitary");
    CHECK(res[2].verdict->to_json()["kernel_dims"].size() == 4);
}

TEST_CASE("farey grid") {
    auto g = farey_grid(Rational(-1), Rational(1), 12);
    CHECK(g.size() == 93);
    CHECK(g.front() == Rational(-1));
    CHECK(g.back() == Rational(1));
    CHECK(std::is_sorted(g.begin(), g.end()));
}
