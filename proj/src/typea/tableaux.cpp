#include "rca/typea/tableaux.hpp"

#include <algorithm>

#include "rca/typea/hooks.hpp"

namespace rca {

int PeriodicTableau::max_entry() const { return window.empty() ? 0 : *std::max_element(window.begin(), window.end()); }

json PeriodicTableau::to_json() const {
    json cells = json::array();
    auto cs = tau.cells();
    for (size_t i = 0; i < cs.size(); ++i) cells.push_back({{"row", cs[i].row}, {"col", cs[i].col}, {"value", window[i]}});
    return {{"tau", tau.str()}, {"kappa", to_string(kappa)}, {"window", cells}};
}

ContentVector content_vector(const PeriodicTableau& T) {
    int n = T.tau.n();
    auto cs = T.tau.cells();
    ContentVector cv;
    cv.entries.assign(n, Rational(0));
    for (size_t x = 0; x < cs.size(); ++x) {
        int v = T.window[x];
        int i = ((v - 1) % n + n) % n + 1;
        long t = (v - i) / n;
        cv.entries[i - 1] = Rational(cs[x].content()) + Rational(t) * T.kappa;
    }
    for (int i = 1; i <= n; ++i) cv.alpha.push_back(cv.entries[n - i] + T.kappa);
    return cv;
}

namespace {

// T(x) < T(y) - shift
struct Constraint {
    int x, y;
    long shift;
};

std::vector<Constraint> constraints(const Partition& tau, const Rational& kappa) {
    auto cs = tau.cells();
    int n = tau.n(), m = tau.length();
    std::vector<Constraint> out;
    for (size_t x = 0; x + 1 < cs.size(); ++x)
        if (cs[x + 1].row == cs[x].row) out.push_back({static_cast<int>(x), static_cast<int>(x + 1), 0});
    // (a, b) and (a + k + 1, b + k) in the periodic diagram: y + j p - x = (k + 1, k)
    for (size_t x = 0; x < cs.size(); ++x)
        for (size_t y = 0; y < cs.size(); ++y) {
            long D = (cs[y].row - cs[x].row) - (cs[y].col - cs[x].col) - 1;
            Rational jq = Rational(D) / kappa;
            if (!is_integer(jq)) continue;
            long j = jq.get_num().get_si();
            Rational k = Rational(cs[y].col - cs[x].col) + Rational(j) * (kappa - m);
            if (k < 0) continue;
            // T(y + j p) = T(y) - j n
            out.push_back({static_cast<int>(x), static_cast<int>(y), j * n});
        }
    return out;
}

}  // namespace

std::vector<TableauEntry> enumerate_tableaux(const Partition& tau, const Rational& kappa, int B) {
    if (kappa <= 0) throw InvalidParams("kappa must be positive");
    if (!p_kappa_member(tau, kappa)) throw NotDiagonalizable("tau " + tau.str() + " is not in P_kappa for kappa = " + to_string(kappa));
    int n = tau.n();
    if (B < n) throw InvalidParams("entry bound must be at least n");
    auto cons = constraints(tau, kappa);
    // constraints whose later cell (in filling order) is the index
    std::vector<std::vector<Constraint>> at(n);
    for (const auto& c : cons) at[std::max(c.x, c.y)].push_back(c);

    std::vector<TableauEntry> out;
    std::vector<int> w(n, 0);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            PeriodicTableau T{tau, kappa, w};
            out.push_back({T, content_vector(T)});
            return;
        }
        for (int v = 1; v <= B; ++v) {
            if (used[v % n]) continue;
            w[pos] = v;
            bool ok = true;
            for (const auto& c : at[pos])
                if (!(w[c.x] < w[c.y] - c.shift)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[v % n] = 1;
            self(self, pos + 1);
            used[v % n] = 0;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const TableauEntry& a, const TableauEntry& b) {
        int ma = a.tableau.max_entry(), mb = b.tableau.max_entry();
        if (ma != mb) return ma < mb;
        return a.tableau.window < b.tableau.window;
    });
    return out;
}

std::vector<SpectrumCheck> spectra_unitary_check(const Partition& tau, const Rational& kappa, int B) {
    std::vector<SpectrumCheck> out;
    for (auto& e : enumerate_tableaux(tau, kappa, B)) {
        const auto& a = e.content.alpha;
        bool gaps = true;
        for (size_t i = 0; i + 1 < a.size(); ++i) {
            Rational d = a[i] - a[i + 1];
            if (d * d < 1) gaps = false;
        }
        bool nonneg = a[0] >= 0;
        out.push_back({std::move(e), nonneg, gaps});
    }
    return out;
}

}  // namespace rca
