#include "doctest.h"
#include "rca/groups/reflection_group.hpp"
#include "rca/scalars/linalg.hpp"

using namespace rca;

namespace {

std::vector<GroupPtr> small_groups() {
    return {ReflectionGroup::symmetric(2), ReflectionGroup::symmetric(3), ReflectionGroup::symmetric(4),
            ReflectionGroup::cyclic(2),    ReflectionGroup::cyclic(3),    ReflectionGroup::cyclic(5),
            ReflectionGroup::dihedral_odd(1), ReflectionGroup::dihedral_odd(2),
            ReflectionGroup::dihedral_even(2), ReflectionGroup::dihedral_even(3)};
}

}  // namespace

TEST_CASE("group construction examples") {
    auto s3 = ReflectionGroup::symmetric(3);
    CHECK(s3->reflections().size() == 3);
    CHECK(s3->num_classes() == 1);
    CHECK(s3->dim_h() == 3);
    auto s4 = ReflectionGroup::symmetric(4);
    CHECK(s4->coxeter_number() == 4);
    CHECK(ReflectionGroup::symmetric(2)->reflections().size() == 1);
    CHECK_THROWS_AS(ReflectionGroup::symmetric(9), OutOfRange);
    CHECK_THROWS_AS(ReflectionGroup::symmetric(1), OutOfRange);

    auto c2 = ReflectionGroup::cyclic(2);
    REQUIRE(c2->reflections().size() == 1);
    CHECK(c2->reflections()[0].lambda == Cyclotomic(-1));
    auto c3 = ReflectionGroup::cyclic(3);
    CHECK(c3->reflections().size() == 2);
    for (const auto& r : c3->reflections()) {
        CHECK(r.lambda * r.lambda * r.lambda == Cyclotomic(1));
        CHECK(r.lambda != Cyclotomic(1));
    }
    CHECK(ReflectionGroup::cyclic(5)->num_classes() == 4);
    CHECK_THROWS_AS(ReflectionGroup::cyclic(13), OutOfRange);

    auto d1 = ReflectionGroup::dihedral_odd(1);
    CHECK(d1->irreps().size() == 3);
    CHECK(d1->coxeter_number() == 3);
    auto e2 = ReflectionGroup::dihedral_even(2);
    std::vector<std::string> labels;
    for (const auto& ir : e2->irreps()) labels.push_back(ir.label());
    CHECK(labels == std::vector<std::string>{"triv", "sign", "eps1", "eps2", "tau1"});
    CHECK(e2->num_classes() == 2);
    CHECK_THROWS_AS(ReflectionGroup::dihedral_even(13), OutOfRange);

    CHECK(ReflectionGroup::from_spec("DihEven:3")->order() == 12);
    CHECK_THROWS_AS(ReflectionGroup::from_spec("Foo:3"), UnknownGroupSpec);
    CHECK_THROWS_AS(ReflectionGroup::from_spec("Sn:x"), UnknownGroupSpec);
}

TEST_CASE("tau_l tensor eps_i = tau_{d-l} on characters") {
    for (int d : {2, 3}) {
        auto g = ReflectionGroup::dihedral_even(d);
        for (int l = 1; l < d; ++l) {
            for (std::string eps : {"eps1", "eps2"}) {
                const auto& t = g->irrep("tau" + std::to_string(l));
                const auto& e = g->irrep(eps);
                const auto& u = g->irrep("tau" + std::to_string(d - l));
                for (size_t w = 0; w < g->order(); ++w) CHECK(t.character(w) * e.character(w) == u.character(w));
            }
        }
    }
}

TEST_CASE("multiplication table closure and associativity") {
    for (const auto& g : small_groups()) {
        if (g->order() > 48) continue;
        size_t n = g->order();
        for (size_t a = 0; a < n; ++a) {
            CHECK(g->multiply(a, g->inverse(a)) == g->identity());
            for (size_t b = 0; b < n; ++b) {
                size_t ab = g->multiply(a, b);
                CHECK(g->matrix_h(ab) == g->matrix_h(a) * g->matrix_h(b));
                for (size_t c = 0; c < n; c += 3) CHECK(g->multiply(ab, c) == g->multiply(a, g->multiply(b, c)));
            }
        }
    }
}

TEST_CASE("reflection data") {
    for (const auto& g : small_groups()) {
        CAPTURE(g->spec());
        size_t total = 0;
        for (const auto& d : g->reflections()) {
            auto A = g->matrix_h(d.element_index) - Matrix<Cyclotomic>::identity(g->dim_h());
            CHECK(rank(A) == 1);
            Cyclotomic pair(0);
            for (int i = 0; i < g->dim_h(); ++i) pair += d.alpha[i] * d.alpha_check[i];
            CHECK(pair == Cyclotomic(2));
            auto sa = g->matrix_hstar(d.element_index).apply(d.alpha);
            for (int i = 0; i < g->dim_h(); ++i) CHECK(sa[i] == d.lambda * d.alpha[i]);
            if (g->is_coxeter()) {
                CHECK(d.lambda == Cyclotomic(-1));
                CHECK(g->multiply(d.element_index, d.element_index) == g->identity());
            }
            // closed under conjugation, and conjugates stay in the class
            for (size_t w = 0; w < g->order(); ++w) {
                size_t c = g->multiply(g->multiply(w, d.element_index), g->inverse(w));
                bool found = false;
                for (const auto& e : g->reflections())
                    if (e.element_index == c) found = e.class_index == d.class_index;
                CHECK(found);
            }
            ++total;
        }
        if (g->is_coxeter()) {
            int sum = 0;
            for (int dj : g->degrees()) sum += dj - 1;
            CHECK(sum == static_cast<int>(total));
        }
    }
}

TEST_CASE("irreps are unitary representations with orthonormal characters") {
    for (const auto& g : small_groups()) {
        CAPTURE(g->spec());
        long dimsq = 0;
        const auto& irr = g->irreps();
        for (const auto& ir : irr) {
            dimsq += ir.dim() * ir.dim();
            for (size_t a = 0; a < g->order(); ++a) {
                const auto& m = ir.matrix(a);
                CHECK(m.conj_transpose() * ir.form() * m == ir.form());
                for (size_t b = 0; b < g->order(); b += 2) CHECK(ir.matrix(g->multiply(a, b)) == m * ir.matrix(b));
            }
        }
        CHECK(dimsq == static_cast<long>(g->order()));
        for (const auto& a : irr)
            for (const auto& b : irr) {
                std::vector<Cyclotomic> chi;
                for (size_t w = 0; w < g->order(); ++w) chi.push_back(a.character(w));
                CHECK(character_inner(*g, chi, b) == Cyclotomic(&a == &b ? 1 : 0));
            }
    }
}

TEST_CASE("seminormal form satisfies Coxeter relations and invariance") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& p : partitions_of(n)) {
            SeminormalRep r(p);
            CHECK(r.dim() == count_syt(p));
            auto id = Matrix<Rational>::identity(r.dim());
            Matrix<Rational> F(r.dim(), r.dim());
            for (int t = 0; t < r.dim(); ++t) {
                F(t, t) = r.form()[t];
                CHECK(r.form()[t] > 0);
            }
            for (int i = 0; i + 1 < n; ++i) {
                const auto& s = r.adjacent(i);
                CHECK(s * s == id);
                CHECK(s.transpose() * F * s == F);
                if (i + 2 < n) {
                    const auto& t = r.adjacent(i + 1);
                    CHECK(s * t * s == t * s * t);
                }
                for (int j = i + 2; j + 1 < n; ++j) CHECK(s * r.adjacent(j) == r.adjacent(j) * s);
            }
        }
}

TEST_CASE("isotypic projectors") {
    auto s3 = ReflectionGroup::symmetric(3);
    // regular representation
    auto reg = [&](size_t w) {
        Matrix<Cyclotomic> m(s3->order(), s3->order());
        for (size_t x = 0; x < s3->order(); ++x) m(s3->multiply(w, x), x) = 1;
        return m;
    };
    auto P = isotypic_projectors(*s3, reg);
    std::map<std::string, size_t> ranks;
    for (auto& [l, p] : P) ranks[l] = rank(p);
    CHECK(ranks["3"] == 1);
    CHECK(ranks["1,1,1"] == 1);
    CHECK(ranks["2,1"] == 4);

    auto Ph = isotypic_projectors(*s3, [&](size_t w) { return s3->matrix_h(w); });
    Matrix<Cyclotomic> sum(3, 3);
    for (auto& [l, p] : Ph) {
        CHECK(p * p == p);
        sum = sum + p;
        for (auto& [l2, q] : Ph)
            if (l2 != l) CHECK((p * q).is_zero_matrix());
    }
    CHECK(sum == Matrix<Cyclotomic>::identity(3));
    for (auto& [l, p] : Ph) {
        if (l == "3") CHECK(rank(p) == 1);
        if (l == "2,1") CHECK(rank(p) == 2);
        if (l == "1,1,1") CHECK(rank(p) == 0);
    }

    auto d2 = ReflectionGroup::dihedral_odd(2);
    const auto& t1 = d2->irrep("tau1");
    auto tt = [&](size_t w) {
        const auto& a = t1.matrix(w);
        Matrix<Cyclotomic> m(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * a(k, l);
        return m;
    };
    for (auto& [l, p] : isotypic_projectors(*d2, tt)) {
        size_t rk = rank(p);
        if (l == "triv" || l == "sign") CHECK(rk == 1);
        if (l == "tau2") CHECK(rk == 2);
        if (l == "tau1") CHECK(rk == 0);
    }

    CHECK_THROWS_AS(isotypic_projectors(*s3, [](size_t w) {
        Matrix<Cyclotomic> m(1, 1);
        m(0, 0) = w == 0 ? 1 : 2;
        return m;
    }), NotARepresentation);
}

TEST_CASE("reflection eigenvalue sums") {
    auto s3 = ReflectionGroup::symmetric(3);
    CHECK(reflection_eigenvalue_sum(*s3, s3->irrep("3"))[0] == Cyclotomic(3));
    CHECK(reflection_eigenvalue_sum(*s3, s3->irrep("1,1,1"))[0] == Cyclotomic(-3));
    for (int n = 2; n <= 5; ++n) {
        auto g = ReflectionGroup::symmetric(n);
        for (const auto& ir : g->irreps())
            CHECK(reflection_eigenvalue_sum(*g, ir)[0] == Cyclotomic(Rational(ir.partition->content())));
    }
    // exterior powers of the reflection representation: |S|(1 - 2i/dim h)
    for (int d : {1, 2}) {
        auto g = ReflectionGroup::dihedral_odd(d);
        long S = static_cast<long>(g->reflections().size());
        CHECK(reflection_eigenvalue_sum(*g, g->irrep("triv"))[0] == Cyclotomic(S));
        CHECK(reflection_eigenvalue_sum(*g, g->irrep("tau1"))[0] == Cyclotomic(0));
        CHECK(reflection_eigenvalue_sum(*g, g->irrep("sign"))[0] == Cyclotomic(-S));
    }
}
