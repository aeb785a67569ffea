#include "rca/typea/hooks.hpp"

#include <algorithm>
#include <numeric>

namespace rca {

HookStats hook_stats(const Partition& tau) {
    HookStats h;
    if (tau.length() == 0) return h;
    h.ell = tau[0] + tau.length() - 1;
    for (int p : tau.parts()) h.m_star += p == tau[0];
    h.N = h.ell - h.m_star + 1;
    h.content = tau.content();
    return h;
}

Partition tau_shift(const Partition& tau, int i) {
    int ms = hook_stats(tau).m_star;
    if (i < 1 || i > ms) throw OutOfRange("tau_shift needs 1 <= i <= m_*");
    std::vector<int> parts = tau.parts();
    // the last i copies of the largest part, so the result stays sorted
    for (int k = ms - i; k < ms; ++k) parts[k] -= 1;
    std::vector<int> out;
    for (int p : parts)
        if (p > 0) out.push_back(p);
    for (int k = 0; k < i; ++k) out.push_back(1);
    std::sort(out.rbegin(), out.rend());
    return Partition(out);
}

ParamPoly f_closed(const Partition& tau, int i) {
    if (i < 1 || i > hook_stats(tau).m_star) throw OutOfRange("f_closed needs 1 <= i <= m_*");
    int N = hook_stats(tau).N;
    ParamPoly c = ParamPoly::variable(1, 0);
    ParamPoly f = ParamPoly::constant(1, Cyclotomic(1));
    for (int k = 0; k < i; ++k) f *= ParamPoly(1) - ParamPoly(N + k) * c;
    return f;
}

LocusDescription genera_locus(const Partition& tau) {
    LocusDescription L;
    L.arity = 1;
    int n = tau.n();
    if (tau.length() == 1) {
        L.intervals.push_back({std::nullopt, frac(1, n)});
        return L;
    }
    if (tau[0] == 1) {
        L.intervals.push_back({frac(-1, n), std::nullopt});
        return L;
    }
    HookStats h = hook_stats(tau), hc = hook_stats(tau.conjugate());
    L.intervals.push_back({frac(-1, h.ell), frac(1, h.ell)});
    for (int k = hc.ell - 1; k >= hc.N; --k) L.points.push_back(frac(-1, k));
    for (int k = h.N; k < h.ell; ++k) L.points.push_back(frac(1, k));
    return L;
}

std::vector<KasataniWeight> kasatani_weights(int n, int r, int m) {
    if (r < 1 || m < 2 || std::gcd(r, m) != 1 || m > n)
        throw InvalidParams("kasatani_weights needs r >= 1, m >= 2, gcd(r, m) = 1, m <= n");
    Rational c = frac(r, m);
    long ct_n = static_cast<long>(n) * (n - 1) / 2;
    std::vector<KasataniWeight> out;
    int l = n / m;
    for (int j = 1; j <= l; ++j) {
        int rest = n - (j - 1) * m;
        int q = rest / (m - 1), s = rest % (m - 1);
        std::vector<int> parts{j * m - 1};
        for (int k = 0; k < q - 1; ++k) parts.push_back(m - 1);
        if (s > 0) parts.push_back(s);
        Partition t(parts);
        out.push_back({t, c * Rational(ct_n - t.content())});
    }
    out.push_back({Partition({n}), Rational(0)});
    return out;
}

bool p_kappa_member(const Partition& tau, const Rational& kappa) {
    if (kappa <= 0) throw InvalidParams("kappa must be positive");
    return Rational(kappa.get_num()) >= hook_stats(tau.conjugate()).N;
}

}  // namespace rca
