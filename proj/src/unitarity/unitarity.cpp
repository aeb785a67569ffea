#include "rca/unitarity/unitarity.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "rca/scalars/sign.hpp"
#include "rca/unitarity/ldl.hpp"
#include "rca/unitarity/symmetric_reduction.hpp"
#include "rca/verma/verma.hpp"

namespace rca {

json Verdict::to_json() const {
    json j;
    j["kind"] = kind == VerdictKind::NonUnitary ? "NonUnitary" : "ConsistentUpTo";
    j["checked_degree"] = checked_degree;
    if (kind == VerdictKind::NonUnitary) {
        j["witness_degree"] = witness_degree;
        if (!witness_type.empty()) j["witness_type"] = witness_type;
        j["witness_norm"] = cyclotomic_to_json(witness_norm);
        json w = json::array();
        for (const auto& x : witness) w.push_back(cyclotomic_to_json(x));
        j["witness_vector"] = w;
    } else {
        j["kernel_dims"] = kernel_dims;
    }
    return j;
}

namespace {

void check_arity(const ReflectionGroup& g, const std::vector<Rational>& c) {
    size_t want = g.kind() == GroupKind::Cyclic ? static_cast<size_t>(g.param() - 1) : static_cast<size_t>(g.num_classes());
    if (c.size() != want)
        throw std::invalid_argument(g.spec() + " takes " + std::to_string(want) + " parameter(s), got " +
                                    std::to_string(c.size()));
}

template <class K>
Verdict certify_with(Verma<K>& V, int D) {
    Verdict out;
    out.checked_degree = D;
    for (int m = 0; m <= D; ++m) {
        const auto& G = V.gram(m);
        auto cg = congruence_with_witness(G);
        if (cg.witness) {
            K norm = form_norm(G, *cg.witness);
            if (sign_of(norm) >= 0) throw std::logic_error("congruence witness is not negative");
            out.kind = VerdictKind::NonUnitary;
            out.witness_degree = m;
            for (const auto& x : *cg.witness) out.witness.push_back(Cyclotomic(x));
            out.witness_norm = Cyclotomic(norm);
            out.kernel_dims.clear();
            return out;
        }
        out.kernel_dims.push_back(static_cast<long>(cg.zeros));
    }
    return out;
}

std::mutex reduction_mu;
std::map<std::string, std::shared_ptr<SymmetricReduction>> reductions;

std::shared_ptr<SymmetricReduction> reduction_for(GroupPtr g, const Irrep& tau, int D, bool interpolate) {
    std::lock_guard<std::mutex> lock(reduction_mu);
    auto& slot = reductions[g->spec() + "/" + tau.label()];
    if (!slot || slot->max_degree() < D) slot = std::make_shared<SymmetricReduction>(g, tau, D);
    if (interpolate) slot->interpolate();
    return slot;
}

Verdict certify_symmetric(GroupPtr g, const Irrep& tau, const Rational& c, int D) {
    auto red = reduction_for(g, tau, D, false);
    auto blocks = red->interpolated() ? red->evaluate(c) : red->evaluate_point(c);
    const auto& info = red->blocks();
    Verdict out;
    out.checked_degree = D;
    out.kernel_dims.assign(D + 1, 0);
    for (int m = 0; m <= D; ++m)
        for (size_t b = 0; b < info.size(); ++b) {
            if (info[b].degree != m) continue;
            auto cg = congruence_with_witness(blocks[b]);
            if (cg.witness) {
                auto v = red->lift(b, *cg.witness);
                Rational norm = lowering_norm(g, tau, {c}, m, v);
                if (sgn(norm) >= 0) throw std::logic_error("lifted witness is not negative");
                out.kind = VerdictKind::NonUnitary;
                out.witness_degree = m;
                out.witness_type = info[b].sigma;
                for (const auto& x : v) out.witness.push_back(Cyclotomic(x));
                out.witness_norm = Cyclotomic(norm);
                out.kernel_dims.clear();
                return out;
            }
            out.kernel_dims[m] += static_cast<long>(cg.zeros) * info[b].sigma_dim;
        }
    return out;
}

}  // namespace

Verdict certify_point_generic(GroupPtr g, const Irrep& tau, const std::vector<Rational>& c, int D) {
    check_arity(*g, c);
    if (g->kind() == GroupKind::Symmetric) {
        Verma<Rational> V(g, tau, {c[0]});
        return certify_with(V, D);
    }
    Verma<Cyclotomic> V(g, tau, point_parameters(*g, c));
    return certify_with(V, D);
}

Verdict certify_point(GroupPtr g, const Irrep& tau, const std::vector<Rational>& c, int D) {
    check_arity(*g, c);
    if (g->kind() == GroupKind::Symmetric) return certify_symmetric(g, tau, c[0], D);
    return certify_point_generic(g, tau, c, D);
}

std::vector<SweepEntry> sweep(GroupPtr g, const Irrep& tau, const std::vector<std::vector<Rational>>& grid, int D,
                              int workers) {
    if (grid.empty()) throw std::invalid_argument("empty grid");
    if (workers <= 0) {
        const char* env = std::getenv("RCA_WORKERS");
        workers = env ? std::atoi(env) : static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }
    if (g->kind() == GroupKind::Symmetric && grid.size() > static_cast<size_t>(D) + 1) reduction_for(g, tau, D, true);

    std::vector<SweepEntry> out(grid.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < grid.size();) {
            out[i].point = grid[i];
            try {
                out[i].verdict = certify_point(g, tau, grid[i], D);
            } catch (const std::exception& e) {
                out[i].error = e.what();
            }
        }
    };
    int nthreads = std::min<int>(workers, static_cast<int>(grid.size()));
    if (nthreads <= 1) {
        work();
        return out;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return out;
}

bool NecessaryConditions::all_satisfied() const {
    if (hc_nonneg && !*hc_nonneg) return false;
    for (const auto& d : degree1)
        if (!d.satisfied) return false;
    return true;
}

NecessaryConditions necessary_conditions(GroupPtr g, const Irrep& tau, const std::vector<Rational>& c) {
    check_arity(*g, c);
    Verma<Cyclotomic> V(g, tau, point_parameters(*g, c));
    NecessaryConditions out;
    // S_n acts on C^n; the invariant line contributes 1/2 to the lowest weight
    out.hc = V.h_weight();
    if (g->kind() == GroupKind::Symmetric) out.hc -= Cyclotomic(frac(1, 2));
    if (g->is_coxeter()) out.hc_nonneg = sign_of(out.hc) >= 0;

    std::vector<Cyclotomic> chi(g->order());
    for (size_t w = 0; w < g->order(); ++w) {
        auto M = g->matrix_hstar(w);
        Cyclotomic tr(0);
        for (int i = 0; i < g->dim_h(); ++i) tr += M(i, i);
        chi[w] = tr * tau.character(w);
    }
    for (const auto& sigma : g->irreps()) {
        if (character_inner(*g, chi, sigma).is_zero()) continue;
        Cyclotomic v = Cyclotomic(1) + V.h_weight() - V.h_weight_of(sigma);
        out.degree1.push_back({sigma.label(), v, sign_of(v) >= 0});
    }
    return out;
}

bool predictor_rank1(int m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m - 1) throw std::invalid_argument("predictor_rank1 needs m - 1 coordinates");
    for (int n = 1; n < m; ++n) {
        Rational e = Rational(n) - b[n - 1];
        if (sgn(e) == 0) return true;
        if (sgn(e) < 0) return false;
    }
    return true;
}

namespace {

LocusDescription interval_locus(std::optional<Rational> lo, std::optional<Rational> hi) {
    LocusDescription d;
    d.arity = 1;
    Interval i;
    i.lo = std::move(lo);
    i.hi = std::move(hi);
    d.intervals.push_back(i);
    return d;
}

HalfPlane half(long a, long b, const Rational& rhs, bool strict = false) {
    return HalfPlane{Rational(a), Rational(b), rhs, strict};
}

}  // namespace

LocusDescription predictor_dihedral(const ReflectionGroup& g, const Irrep& tau) {
    const std::string& l = tau.label();
    if (g.kind() == GroupKind::DihedralOdd) {
        Rational h = frac(1, 2 * g.param() + 1);
        if (l == "triv") return interval_locus(std::nullopt, h);
        if (l == "sign") return interval_locus(-h, std::nullopt);
        if (l.rfind("tau", 0) == 0) {
            long k = std::stol(l.substr(3));
            return interval_locus(-h * k, h * k);
        }
        throw UnsupportedIrrep("no dihedral locus for " + l);
    }
    if (g.kind() != GroupKind::DihedralEven) throw UnsupportedIrrep("predictor_dihedral needs a dihedral group");
    int d = g.param();
    Rational inv_d = frac(1, d);
    LocusDescription triv;
    triv.arity = 2;
    triv.regions.push_back(Region{{half(1, 1, inv_d, true), half(1, 0, frac(1, 2)), half(0, 1, frac(1, 2))}});
    triv.regions.push_back(Region{{half(1, 1, inv_d), half(-1, -1, -inv_d)}});
    // twists: eps1 = -1 on the class of s, eps2 = -1 on the class of rs
    if (l == "triv") return triv;
    if (l == "sign") return triv.scaled({-1, -1});
    if (l == "eps1") return triv.scaled({-1, 1});
    if (l == "eps2") return triv.scaled({1, -1});
    if (l.rfind("tau", 0) == 0) {
        long k = std::stol(l.substr(3));
        Rational p = inv_d * k, q = inv_d * (d - k);
        LocusDescription out;
        out.arity = 2;
        out.regions.push_back(Region{{half(1, 1, p), half(-1, -1, p), half(1, -1, q), half(-1, 1, q)}});
        return out;
    }
    throw UnsupportedIrrep("no dihedral locus for " + l);
}

std::string exterior_power_label(const ReflectionGroup& g, int i) {
    switch (g.kind()) {
        case GroupKind::Symmetric: {
            int n = g.param();
            if (i < 0 || i > n - 1) throw OutOfRange("exterior power out of range");
            std::vector<int> parts{n - i};
            for (int k = 0; k < i; ++k) parts.push_back(1);
            return Partition(parts).str();
        }
        case GroupKind::DihedralOdd:
        case GroupKind::DihedralEven:
            if (i == 0) return "triv";
            if (i == 1) return "tau1";
            if (i == 2) return "sign";
            throw OutOfRange("exterior power out of range");
        case GroupKind::Cyclic:
            if (g.param() == 2 && (i == 0 || i == 1)) return std::to_string(i);
            break;
    }
    throw UnsupportedIrrep("exterior powers need a Coxeter group");
}

LocusDescription predictor_coxeter_exterior(const ReflectionGroup& g, int i) {
    if (!g.is_coxeter()) throw UnsupportedIrrep("predictor_coxeter_exterior needs a Coxeter group");
    exterior_power_label(g, i);  // range check
    int r = g.kind() == GroupKind::Symmetric ? g.param() - 1 : g.dim_h();
    Rational h = frac(1, g.coxeter_number());
    if (i == 0) return interval_locus(std::nullopt, h);
    if (i == r) return interval_locus(-h, std::nullopt);
    return interval_locus(-h, h);
}

int mm_pole_order(const MMData& data, const Rational& c) {
    auto nonpos_int = [](const Rational& q) { return q.get_den() == 1 && sgn(q) <= 0; };
    int order = 0;
    for (int d : data.degrees)
        if (nonpos_int(Rational(1) - Rational(d) * c)) ++order;
    if (nonpos_int(Rational(1) - c)) --order;
    return order;
}

Rational lowering_norm(GroupPtr g, const Irrep& tau, const std::vector<Rational>& c, int m,
                       const std::vector<Rational>& v) {
    if (g->kind() != GroupKind::Symmetric) throw std::invalid_argument("lowering_norm is implemented for S_n");
    Verma<Rational> V(g, tau, c);
    int dt = tau.dim();
    if (v.size() != V.dim(m)) throw std::invalid_argument("vector has the wrong length for its degree");
    // y^mu v along the chain mu -> mu - e_k (k the first nonzero index)
    std::map<Exponents, std::vector<Rational>> memo;
    std::function<const std::vector<Rational>&(const Exponents&)> lowered = [&](const Exponents& mu)
        -> const std::vector<Rational>& {
        auto it = memo.find(mu);
        if (it != memo.end()) return it->second;
        int deg = 0, k = -1;
        for (size_t i = 0; i < mu.size(); ++i) {
            deg += mu[i];
            if (k < 0 && mu[i] > 0) k = static_cast<int>(i);
        }
        std::vector<Rational> r;
        if (deg == 0) {
            r = v;
        } else {
            Exponents parent = mu;
            --parent[k];
            const auto& pv = lowered(parent);
            r = Verma<Rational>::apply(V.y(m - deg + 1)[k], pv);
        }
        return memo.emplace(mu, std::move(r)).first->second;
    };
    const auto& monos = V.monomials(m);
    const auto& form = tau.form();
    Rational total(0);
    for (size_t a = 0; a < monos.size(); ++a) {
        bool any = false;
        for (int t = 0; t < dt; ++t) any = any || sgn(v[a * dt + t]) != 0;
        if (!any) continue;
        const auto& low = lowered(monos[a]);
        for (int t = 0; t < dt; ++t) {
            if (sgn(v[a * dt + t]) == 0) continue;
            for (int u = 0; u < dt; ++u) {
                Rational f = scalar_from<Rational>(form(t, u));
                if (sgn(f) != 0) total += v[a * dt + t] * f * low[u];
            }
        }
    }
    return total;
}

std::vector<Rational> farey_grid(const Rational& lo, const Rational& hi, int max_den) {
    std::set<Rational> pts;
    for (long q = 1; q <= max_den; ++q) {
        mpz_class a = lo.get_num() * q, b = lo.get_den();
        mpz_class start;
        mpz_cdiv_q(start.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        for (mpz_class p = start;; ++p) {
            Rational x(p, q);
            x.canonicalize();
            if (x > hi) break;
            pts.insert(x);
        }
    }
    return {pts.begin(), pts.end()};
}

}  // namespace rca
