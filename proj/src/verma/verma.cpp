#include "rca/verma/verma.hpp"

#include <mutex>

namespace rca {

const std::vector<std::vector<DividedDifference>>& divided_differences(const ReflectionGroup& g, int m) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::unique_ptr<std::vector<std::vector<DividedDifference>>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(g.spec(), m);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    MonomialBasis B(g.dim_h(), m), L(g.dim_h(), m - 1);
    auto out = std::make_unique<std::vector<std::vector<DividedDifference>>>(B.size());
    for (size_t a = 0; a < B.size(); ++a) {
        auto& row = (*out)[a];
        row.resize(g.reflections().size());
        for (size_t s = 0; s < g.reflections().size(); ++s) {
            const auto& r = g.reflections()[s];
            auto [coef, nu] = g.act_monomial(r.element_index, B[a]);
            SparsePoly f;
            f[B[a]] += Cyclotomic(1);
            f[nu] -= coef;
            for (auto fi = f.begin(); fi != f.end();)
                fi = fi->second.is_zero() ? f.erase(fi) : std::next(fi);
            if (f.empty()) continue;
            for (auto& [mono, q] : divide_by_linear(f, r.alpha)) row[s].push_back({L.find(mono), q});
        }
    }
    return *(cache[key] = std::move(out));
}

Cyclotomic cyclic_b(const ReflectionGroup& g, const std::vector<Cyclotomic>& c, int n) {
    Cyclotomic b(0);
    for (size_t s = 0; s < g.reflections().size(); ++s) {
        const auto& lam = g.reflections()[s].lambda;
        Cyclotomic ln(1);
        for (int k = 0; k < n; ++k) ln *= lam;
        b += Cyclotomic(2) * (Cyclotomic(1) - ln) / (Cyclotomic(1) - lam) * c[g.reflections()[s].class_index];
    }
    return b;
}

std::vector<Cyclotomic> cyclic_c_from_b(const ReflectionGroup& g, const std::vector<Rational>& b) {
    if (g.kind() != GroupKind::Cyclic) throw std::invalid_argument("b-coordinates need a cyclic group");
    int m = g.param();
    if (static_cast<int>(b.size()) != m - 1) throw std::invalid_argument("need m-1 b-coordinates");
    // column j of A: b-vector of the unit parameter c_j = 1
    Matrix<Cyclotomic> A(m - 1, m - 1);
    for (int j = 0; j < m - 1; ++j) {
        std::vector<Cyclotomic> e(m - 1, Cyclotomic(0));
        e[j] = Cyclotomic(1);
        for (int n = 1; n < m; ++n) A(n - 1, j) = cyclic_b(g, e, n);
    }
    std::vector<Cyclotomic> rhs(b.begin(), b.end());
    auto c = solve(A, rhs);
    if (!c) throw std::logic_error("b-coordinate system is singular");
    for (auto& x : *c) x = normalize(x);
    return *c;
}

std::vector<Cyclotomic> point_parameters(const ReflectionGroup& g, const std::vector<Rational>& values) {
    if (g.kind() == GroupKind::Cyclic) return cyclic_c_from_b(g, values);
    if (static_cast<int>(values.size()) != g.num_classes())
        throw std::invalid_argument("expected " + std::to_string(g.num_classes()) + " parameter value(s)");
    return {values.begin(), values.end()};
}

std::vector<ParamPoly> symbolic_parameters(const ReflectionGroup& g) {
    int k = g.num_classes();
    if (g.kind() == GroupKind::Cyclic) {
        // c_j as linear forms in the real coordinates b_1..b_{m-1}
        if (k > 2) throw std::invalid_argument("symbolic parameters support at most two classes");
        std::vector<ParamPoly> out(k, ParamPoly::constant(k, Cyclotomic(0)));
        for (int n = 0; n < k; ++n) {
            std::vector<Rational> b(k, Rational(0));
            b[n] = 1;
            auto c = cyclic_c_from_b(g, b);
            for (int j = 0; j < k; ++j) out[j] += ParamPoly::variable(k, n) * ParamPoly(c[j]);
        }
        return out;
    }
    if (k > 2) throw std::invalid_argument("symbolic parameters support at most two classes");
    std::vector<ParamPoly> out;
    for (int i = 0; i < k; ++i) out.push_back(ParamPoly::variable(k, i));
    return out;
}

}  // namespace rca
