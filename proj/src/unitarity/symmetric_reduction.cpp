#include "rca/unitarity/symmetric_reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "rca/scalars/linalg.hpp"
#include "rca/verma/monomials.hpp"

namespace rca {

namespace {

using Vec = std::vector<Rational>;
using FullVec = std::map<uint64_t, Vec>;  // monomial key -> tau component
using Col = std::vector<std::pair<int, Rational>>;

Exponents decode(uint64_t key, int n) {
    Exponents mu(n);
    for (int i = 0; i < n; ++i) mu[i] = static_cast<int>((key >> (8 * i)) & 0xff);
    return mu;
}

void axpy(Vec& acc, const Rational& a, const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) acc[i] += a * v[i];
}

Vec mat_vec(const Matrix<Rational>& m, const Vec& v) {
    Vec out(m.rows(), Rational(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (sgn(v[j]) != 0 && sgn(m(i, j)) != 0) out[i] += m(i, j) * v[j];
    return out;
}

bool all_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// Young subgroup of S_n together with the trivial or the sign character
struct Young {
    std::vector<std::vector<int>> blocks;  // sorted, ordered by first element, singletons included
    bool sign = false;

    std::string key() const {
        std::string s;
        for (const auto& b : blocks) {
            for (int i : b) s += std::to_string(i) + ",";
            s += "|";
        }
        return s + (sign ? "-" : "+");
    }
    bool canonical(const Exponents& mu) const {
        for (const auto& b : blocks)
            for (size_t a = 1; a < b.size(); ++a)
                if (mu[b[a]] > mu[b[a - 1]]) return false;
        return true;
    }
    bool has_singleton() const {
        return std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
    }
    // first element of block bi split off as a singleton
    Young split(size_t bi) const {
        Young y;
        y.sign = sign;
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (i != bi) {
                y.blocks.push_back(blocks[i]);
                continue;
            }
            y.blocks.push_back({blocks[i][0]});
            y.blocks.emplace_back(blocks[i].begin() + 1, blocks[i].end());
        }
        std::sort(y.blocks.begin(), y.blocks.end());
        return y;
    }
};

struct Perm {
    std::vector<int> w;  // w[j] = image of j
    int sign = 1;
    Matrix<Rational> rho;
};

std::vector<Perm> product_group(const std::vector<std::vector<int>>& blocks, int n,
                                const SeminormalRep& rep) {
    std::vector<std::vector<int>> elems{std::vector<int>(n)};
    std::iota(elems[0].begin(), elems[0].end(), 0);
    for (const auto& b : blocks) {
        if (b.size() < 2) continue;
        std::vector<std::vector<int>> next;
        std::vector<int> img = b;
        do {
            for (const auto& e : elems) {
                auto f = e;
                for (size_t i = 0; i < b.size(); ++i) f[b[i]] = img[i];
                next.push_back(std::move(f));
            }
        } while (std::next_permutation(img.begin(), img.end()));
        elems = std::move(next);
    }
    std::vector<Perm> out;
    for (auto& w : elems) {
        Perm p;
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = w[j]) seen[j] = true, ++len;
            if (len % 2 == 0) p.sign = -p.sign;
        }
        p.rho = rep.permutation(w);
        p.w = std::move(w);
        out.push_back(std::move(p));
    }
    return out;
}

Exponents act(const std::vector<int>& w, const Exponents& mu) {
    Exponents nu(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) nu[w[i]] = mu[i];
    return nu;
}

// g.v summed over a finite set with signs
FullVec apply_group_sum(const std::vector<Perm>& group, bool signed_sum, const FullVec& v, int n,
                        const Young* only_canonical) {
    FullVec out;
    for (const auto& [key, vec] : v) {
        Exponents mu = decode(key, n);
        for (const auto& g : group) {
            Exponents nu = act(g.w, mu);
            if (only_canonical && !only_canonical->canonical(nu)) continue;
            Vec img = mat_vec(g.rho, vec);
            auto& acc = out[mono_key(nu)];
            if (acc.empty()) acc.assign(vec.size(), Rational(0));
            axpy(acc, Rational(signed_sum ? g.sign : 1), img);
        }
    }
    for (auto it = out.begin(); it != out.end();) it = all_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

struct Fixed {
    Matrix<Rational> W;      // dim tau x r, identity at `rows`
    std::vector<int> rows;
};

struct Orbit {
    Exponents rep;
    int first = 0;
    std::shared_ptr<const Fixed> fixed;
    std::vector<std::pair<uint64_t, Matrix<Rational>>> terms;  // chi(h) rho(h) W at x^{h rep}
};

// basis of the (H, chi)-isotypic part of tau (x) S^m
struct Space {
    Young X;
    int m = 0;
    int dim = 0;
    std::vector<Orbit> orbits;
    std::unordered_map<uint64_t, int> by_rep;
    std::vector<std::pair<int, int>> basis;  // (orbit, column)

    FullVec vector(int b) const {
        auto [o, i] = basis[b];
        FullVec v;
        for (const auto& [key, M] : orbits[o].terms) {
            Vec col(M.rows());
            for (size_t r = 0; r < M.rows(); ++r) col[r] = M(r, i);
            v[key] = std::move(col);
        }
        return v;
    }
    // coordinates of a vector of M^X (read at orbit representatives)
    Col coords(const FullVec& v) const {
        Col out;
        for (const auto& [key, vec] : v) {
            auto it = by_rep.find(key);
            if (it == by_rep.end()) continue;
            const Orbit& o = orbits[it->second];
            for (size_t i = 0; i < o.fixed->rows.size(); ++i) {
                const Rational& a = vec[o.fixed->rows[i]];
                if (sgn(a) != 0) out.emplace_back(o.first + static_cast<int>(i), a);
            }
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }
};

struct Step {
    std::vector<Col> A, R;  // y_k = A - c R, columns indexed by source basis
};

struct Node {
    std::shared_ptr<Space> space;
    // per source row: singleton index used (case 1) or -1
    std::vector<int> row_k;
    std::map<int, Step> singleton_steps;     // target: same X, degree m-1
    std::vector<std::pair<size_t, Step>> block_steps;  // (block index, step) target X_B at m-1
    std::vector<std::string> block_targets;
    std::vector<Rational> block_weight;  // |B|/m
};

struct BlockData {
    std::string xkey;
    bool column_op = false;  // op = signed column sum (X = rows) or row sum (X = columns)
    std::vector<int> S;      // chosen basis indices in M^X
    std::vector<Col> cop;    // coordinates of P_X op u_S
};

}  // namespace

struct SymmetricReduction::Impl {
    GroupPtr g;
    Irrep tau;
    std::shared_ptr<const SeminormalRep> rep;
    int n = 0, D = 0, dt = 0;
    std::vector<BlockInfo> infos;
    std::vector<BlockData> bdata;
    std::vector<std::map<std::string, Node>> nodes;  // by degree
    std::map<std::string, Young> youngs;
    std::map<std::string, std::vector<Perm>> hgroups;
    std::map<std::string, std::vector<Perm>> opgroups;  // keyed by sigma label
    std::map<std::vector<std::pair<int, int>>, std::shared_ptr<const Fixed>> fixed_cache[2];

    bool have_poly = false;
    std::vector<std::vector<Matrix<Rational>>> poly;  // per block, coefficients

    Impl(GroupPtr gp, const Irrep& t, int d) : g(std::move(gp)), tau(t), D(d) {}

    const std::vector<Perm>& hgroup(const Young& X) {
        auto& slot = hgroups[X.key()];
        if (slot.empty()) slot = product_group(X.blocks, n, *rep);
        return slot;
    }

    std::shared_ptr<const Fixed> fixed_space(const Young& X, const Exponents& mu) {
        std::vector<std::pair<int, int>> gens;
        for (const auto& b : X.blocks)
            for (size_t a = 1; a < b.size(); ++a)
                if (mu[b[a]] == mu[b[a - 1]]) gens.emplace_back(b[a - 1], b[a]);
        auto& slot = fixed_cache[X.sign][gens];
        if (slot) return slot;
        auto f = std::make_shared<Fixed>();
        Rational chi(X.sign ? -1 : 1);
        Matrix<Rational> stack(gens.size() * dt, dt);
        for (size_t k = 0; k < gens.size(); ++k) {
            const auto& t = rep->transposition(gens[k].first, gens[k].second);
            for (int i = 0; i < dt; ++i)
                for (int j = 0; j < dt; ++j) stack(k * dt + i, j) = t(i, j) - (i == j ? chi : Rational(0));
        }
        auto r = rref(stack);
        std::vector<bool> piv(dt, false);
        for (auto p : r.pivots) piv[p] = true;
        f->W = nullspace(stack);
        for (int j = 0; j < dt; ++j)
            if (!piv[j]) f->rows.push_back(j);
        slot = f;
        return slot;
    }

    std::shared_ptr<Space> build_space(const Young& X, int m) {
        auto sp = std::make_shared<Space>();
        sp->X = X;
        sp->m = m;
        MonomialBasis mb(n, m);
        Rational chi(X.sign ? -1 : 1);
        for (const auto& mu : mb.all()) {
            if (!X.canonical(mu)) continue;
            Orbit o;
            o.rep = mu;
            o.fixed = fixed_space(X, mu);
            if (o.fixed->W.cols() == 0) continue;
            o.first = sp->dim;
            // orbit under H through adjacent transpositions inside blocks
            std::map<uint64_t, size_t> seen;
            o.terms.emplace_back(mono_key(mu), o.fixed->W);
            seen[mono_key(mu)] = 0;
            for (size_t q = 0; q < o.terms.size(); ++q) {
                Exponents nu = decode(o.terms[q].first, n);
                for (const auto& b : X.blocks)
                    for (size_t a = 1; a < b.size(); ++a) {
                        int i = b[a - 1], j = b[a];
                        if (nu[i] == nu[j]) continue;
                        Exponents nn = nu;
                        std::swap(nn[i], nn[j]);
                        uint64_t k = mono_key(nn);
                        if (seen.count(k)) continue;
                        seen[k] = o.terms.size();
                        Matrix<Rational> M = (rep->transposition(i, j) * o.terms[q].second).scaled(chi);
                        o.terms.emplace_back(k, std::move(M));
                    }
            }
            int r = static_cast<int>(o.fixed->W.cols());
            int oi = static_cast<int>(sp->orbits.size());
            for (int i = 0; i < r; ++i) sp->basis.emplace_back(oi, i);
            sp->dim += r;
            sp->by_rep[mono_key(mu)] = oi;
            sp->orbits.push_back(std::move(o));
        }
        return sp;
    }

    // y_k on the basis of `src`, read in `dst`
    Step dunkl(const Space& src, int k, const Space& dst) {
        Step st;
        st.A.resize(src.dim);
        st.R.resize(src.dim);
        for (int b = 0; b < src.dim; ++b) {
            FullVec a_part, r_part;
            auto add = [&](FullVec& tgt, const Exponents& mu, const Rational& coef, const Vec& v) {
                if (!dst.X.canonical(mu)) return;
                auto& acc = tgt[mono_key(mu)];
                if (acc.empty()) acc.assign(dt, Rational(0));
                axpy(acc, coef, v);
            };
            for (const auto& [key, vec] : src.vector(b)) {
                Exponents nu = decode(key, n);
                if (nu[k] > 0) {
                    Exponents lo = nu;
                    --lo[k];
                    add(a_part, lo, Rational(nu[k]), vec);
                }
                for (int j = 0; j < n; ++j) {
                    if (j == k || nu[k] == nu[j]) continue;
                    Vec sv = mat_vec(rep->transposition(k, j), vec);
                    int a = nu[k], bb = nu[j];
                    int lo = std::min(a, bb), len = std::abs(a - bb);
                    Rational sign(a > bb ? 1 : -1);
                    for (int p = 0; p < len; ++p) {
                        Exponents q = nu;
                        q[k] = lo + len - 1 - p;
                        q[j] = lo + p;
                        add(r_part, q, sign, sv);
                    }
                }
            }
            st.A[b] = dst.coords(a_part);
            st.R[b] = dst.coords(r_part);
        }
        return st;
    }

    Node& node(const Young& X, int m) {
        auto key = X.key();
        youngs.emplace(key, X);
        auto it = nodes[m].find(key);
        if (it != nodes[m].end()) return it->second;
        Node& nd = nodes[m][key];
        nd.space = build_space(X, m);
        return nd;
    }

    void build() {
        rep = tau.seminormal;
        if (!rep || g->kind() != GroupKind::Symmetric) throw std::invalid_argument("symmetric reduction needs S_n");
        n = g->dim_h();
        dt = tau.dim();
        nodes.resize(D + 1);

        // one Young subgroup per W-type
        std::vector<std::pair<const Irrep*, Young>> types;
        for (const auto& sigma : g->irreps()) {
            const Partition& p = *sigma.partition;
            Young rows, cols;
            int base = 0;
            std::vector<std::vector<int>> colb(p[0]);
            for (int r = 0; r < p.length(); ++r) {
                std::vector<int> row;
                for (int c = 0; c < p[r]; ++c) {
                    row.push_back(base + c);
                    colb[c].push_back(base + c);
                }
                rows.blocks.push_back(row);
                base += p[r];
            }
            cols.blocks = colb;
            std::sort(cols.blocks.begin(), cols.blocks.end());
            cols.sign = true;
            auto order = [](const std::vector<std::vector<int>>& bl) {
                long o = 1;
                for (const auto& b : bl)
                    for (size_t i = 2; i <= b.size(); ++i) o *= static_cast<long>(i);
                return o;
            };
            bool use_rows = order(rows.blocks) >= order(cols.blocks);
            Young X = use_rows ? rows : cols;
            const auto& opb = use_rows ? cols.blocks : rows.blocks;
            opgroups[sigma.label()] = product_group(opb, n, *rep);
            types.emplace_back(&sigma, X);
            for (int m = 0; m <= D; ++m) {
                int mult = symmetric_power_multiplicity(*g, tau, m, sigma);
                if (mult == 0) continue;
                infos.push_back({m, sigma.label(), sigma.dim(), mult});
                BlockData bd;
                bd.xkey = X.key();
                bd.column_op = use_rows;
                bdata.push_back(bd);
                node(X, m);
            }
        }

        // recursion targets, top-down
        for (int m = D; m >= 1; --m) {
            std::vector<std::string> keys;
            for (const auto& [k, nd] : nodes[m]) keys.push_back(k);
            for (const auto& key : keys) {
                Young X = youngs.at(key);
                auto sp = nodes[m].at(key).space;
                std::vector<int> row_k(sp->dim, -1);
                bool need_case2 = false;
                for (int b = 0; b < sp->dim; ++b) {
                    const Exponents& mu = sp->orbits[sp->basis[b].first].rep;
                    for (const auto& blk : X.blocks)
                        if (blk.size() == 1 && mu[blk[0]] > 0) {
                            row_k[b] = blk[0];
                            break;
                        }
                    if (row_k[b] < 0) need_case2 = true;
                }
                std::map<int, Step> single;
                for (int b = 0; b < sp->dim; ++b)
                    if (row_k[b] >= 0 && !single.count(row_k[b])) {
                        Node& lower = node(X, m - 1);
                        single[row_k[b]] = dunkl(*sp, row_k[b], *lower.space);
                    }
                std::vector<std::pair<size_t, Step>> bsteps;
                std::vector<std::string> btargets;
                std::vector<Rational> bweights;
                if (need_case2)
                    for (size_t bi = 0; bi < X.blocks.size(); ++bi) {
                        if (X.blocks[bi].size() < 2) continue;
                        Young XB = X.split(bi);
                        Node& lower = node(XB, m - 1);
                        bsteps.emplace_back(bi, dunkl(*sp, X.blocks[bi][0], *lower.space));
                        btargets.push_back(XB.key());
                        bweights.push_back(frac(static_cast<long>(X.blocks[bi].size()), m));
                    }
                Node& nd = nodes[m].at(key);
                nd.row_k = std::move(row_k);
                nd.singleton_steps = std::move(single);
                nd.block_steps = std::move(bsteps);
                nd.block_targets = std::move(btargets);
                nd.block_weight = std::move(bweights);
            }
        }

        // multiplicity spaces
        for (size_t bi = 0; bi < infos.size(); ++bi) {
            auto& bd = bdata[bi];
            const Space& sp = *nodes[infos[bi].degree].at(bd.xkey).space;
            const auto& opg = opgroups.at(infos[bi].sigma);
            const auto& hg = hgroup(sp.X);
            // incremental echelon form of accepted columns
            std::vector<std::pair<int, Vec>> ech;  // (pivot, dense row)
            for (int b = 0; b < sp.dim && static_cast<int>(bd.S.size()) < infos[bi].mult; ++b) {
                FullVec u = apply_group_sum(opg, bd.column_op, sp.vector(b), n, nullptr);
                if (u.empty()) continue;
                FullVec pu = apply_group_sum(hg, sp.X.sign, u, n, &sp.X);
                Col c = sp.coords(pu);
                Vec d(sp.dim, Rational(0));
                for (const auto& [i, v] : c) d[i] = v;
                for (const auto& [p, row] : ech)
                    if (sgn(d[p]) != 0) {
                        Rational f = d[p];
                        axpy(d, -f, row);
                    }
                int p = -1;
                for (int i = 0; i < sp.dim; ++i)
                    if (sgn(d[i]) != 0) {
                        p = i;
                        break;
                    }
                if (p < 0) continue;
                Rational inv = 1 / d[p];
                for (auto& x : d) x *= inv;
                for (auto& [q, row] : ech)
                    if (sgn(row[p]) != 0) {
                        Rational f = row[p];
                        axpy(row, -f, d);
                    }
                ech.emplace_back(p, std::move(d));
                bd.S.push_back(b);
                bd.cop.push_back(std::move(c));
            }
            if (static_cast<int>(bd.S.size()) != infos[bi].mult)
                throw std::logic_error("multiplicity space has the wrong dimension");
        }
    }

    static std::vector<Col> combine(const Step& st, const Rational& c) {
        std::vector<Col> out(st.A.size());
        for (size_t b = 0; b < st.A.size(); ++b) {
            std::map<int, Rational> acc;
            for (const auto& [i, v] : st.A[b]) acc[i] += v;
            if (sgn(c) != 0)
                for (const auto& [i, v] : st.R[b]) acc[i] -= c * v;
            for (auto& [i, v] : acc)
                if (sgn(v) != 0) out[b].emplace_back(i, v);
        }
        return out;
    }

    std::vector<Matrix<Rational>> run(const Rational& c) const {
        std::vector<Matrix<Rational>> out(infos.size());
        std::map<std::string, Matrix<Rational>> prev, cur;
        for (int m = 0; m <= D; ++m) {
            cur.clear();
            for (const auto& [key, nd] : nodes[m]) {
                const Space& sp = *nd.space;
                Matrix<Rational> G(sp.dim, sp.dim);
                if (m == 0) {
                    if (sp.dim > 0) {
                        const auto& W = sp.orbits[0].fixed->W;
                        const auto& form = rep->form();
                        for (int i = 0; i < sp.dim; ++i)
                            for (int j = 0; j < sp.dim; ++j)
                                for (int t = 0; t < dt; ++t) G(i, j) += W(t, i) * form[t] * W(t, j);
                    }
                    cur.emplace(key, std::move(G));
                    continue;
                }
                std::map<int, std::vector<Col>> ysingle;
                for (const auto& [k, st] : nd.singleton_steps) ysingle[k] = combine(st, c);
                std::vector<std::vector<Col>> yblock;
                for (const auto& bs : nd.block_steps) yblock.push_back(combine(bs.second, c));
                std::vector<std::map<int, Vec>> trows(nd.block_steps.size());
                const Matrix<Rational>* gsame = nd.singleton_steps.empty() ? nullptr : &prev.at(key);
                const Space* lower_same = nullptr;
                if (gsame) lower_same = nodes[m - 1].at(key).space.get();

                for (int b = 0; b < sp.dim; ++b) {
                    int k = nd.row_k[b];
                    if (k >= 0) {
                        auto [o, i] = sp.basis[b];
                        Exponents lo = sp.orbits[o].rep;
                        --lo[k];
                        const Orbit& lo_orbit = lower_same->orbits[lower_same->by_rep.at(mono_key(lo))];
                        int bt = lo_orbit.first + i;
                        const auto& Y = ysingle.at(k);
                        for (int b2 = b; b2 < sp.dim; ++b2) {
                            Rational s(0);
                            for (const auto& [q, v] : Y[b2])
                                if (sgn((*gsame)(bt, q)) != 0) s += (*gsame)(bt, q) * v;
                            G(b, b2) = s;
                        }
                        continue;
                    }
                    for (size_t si = 0; si < nd.block_steps.size(); ++si) {
                        const auto& Acol = nd.block_steps[si].second.A[b];
                        if (Acol.empty()) continue;
                        const Matrix<Rational>& GB = prev.at(nd.block_targets[si]);
                        const auto& Y = yblock[si];
                        for (const auto& [p, a] : Acol) {
                            auto it = trows[si].find(p);
                            if (it == trows[si].end()) {
                                Vec row(sp.dim, Rational(0));
                                for (int b2 = 0; b2 < sp.dim; ++b2)
                                    for (const auto& [q, v] : Y[b2])
                                        if (sgn(GB(p, q)) != 0) row[b2] += GB(p, q) * v;
                                it = trows[si].emplace(p, std::move(row)).first;
                            }
                            Rational w = nd.block_weight[si] * a;
                            for (int b2 = b; b2 < sp.dim; ++b2)
                                if (sgn(it->second[b2]) != 0) G(b, b2) += w * it->second[b2];
                        }
                    }
                }
                for (int b = 0; b < sp.dim; ++b)
                    for (int b2 = 0; b2 < b; ++b2) G(b, b2) = G(b2, b);
                cur.emplace(key, std::move(G));
            }
            for (size_t bi = 0; bi < infos.size(); ++bi) {
                if (infos[bi].degree != m) continue;
                const auto& bd = bdata[bi];
                const Matrix<Rational>& G = cur.at(bd.xkey);
                size_t r = bd.S.size();
                Matrix<Rational> B(r, r);
                for (size_t i = 0; i < r; ++i)
                    for (size_t j = 0; j < r; ++j)
                        for (const auto& [q, v] : bd.cop[j])
                            if (sgn(G(bd.S[i], q)) != 0) B(i, j) += G(bd.S[i], q) * v;
                if (!(B == B.transpose())) throw std::logic_error("reduced Gram block is not symmetric");
                out[bi] = std::move(B);
            }
            prev.swap(cur);
        }
        return out;
    }
};

SymmetricReduction::SymmetricReduction(GroupPtr g, const Irrep& tau, int max_degree)
    : impl_(std::make_unique<Impl>(std::move(g), tau, max_degree)) {
    impl_->build();
}

SymmetricReduction::~SymmetricReduction() = default;

int SymmetricReduction::max_degree() const { return impl_->D; }

const std::vector<SymmetricReduction::BlockInfo>& SymmetricReduction::blocks() const { return impl_->infos; }

std::vector<Matrix<Rational>> SymmetricReduction::evaluate_point(const Rational& c) const {
    return impl_->run(c);
}

bool SymmetricReduction::interpolated() const { return impl_->have_poly; }

void SymmetricReduction::interpolate() {
    if (impl_->have_poly) return;
    int D = impl_->D;
    std::vector<std::vector<Matrix<Rational>>> samples;
    for (int j = 0; j <= D; ++j) samples.push_back(impl_->run(Rational(j)));
    auto& poly = impl_->poly;
    poly.assign(impl_->infos.size(), {});
    for (size_t bi = 0; bi < impl_->infos.size(); ++bi) {
        int m = impl_->infos[bi].degree;
        // inverse Vandermonde on nodes 0..m
        Matrix<Rational> V(m + 1, m + 1);
        for (int i = 0; i <= m; ++i) {
            Rational p(1);
            for (int k = 0; k <= m; ++k) {
                V(i, k) = p;
                p *= i;
            }
        }
        Matrix<Rational> Vi = *inverse(V);
        size_t r = samples[0][bi].rows();
        std::vector<Matrix<Rational>> coef(m + 1, Matrix<Rational>(r, r));
        for (int k = 0; k <= m; ++k)
            for (int i = 0; i <= m; ++i) {
                if (sgn(Vi(k, i)) == 0) continue;
                for (size_t a = 0; a < r; ++a)
                    for (size_t b = 0; b < r; ++b) coef[k](a, b) += Vi(k, i) * samples[i][bi](a, b);
            }
        poly[bi] = std::move(coef);
    }
    impl_->have_poly = true;
}

std::vector<Matrix<Rational>> SymmetricReduction::evaluate(const Rational& c) const {
    if (!impl_->have_poly) throw std::logic_error("interpolate() has not run");
    std::vector<Matrix<Rational>> out;
    for (const auto& coef : impl_->poly) {
        Matrix<Rational> acc = coef.back();
        for (int k = static_cast<int>(coef.size()) - 2; k >= 0; --k) acc = acc.scaled(c) + coef[k];
        out.push_back(std::move(acc));
    }
    return out;
}

Matrix<Rational> SymmetricReduction::coefficient(size_t b, int k) const {
    if (!impl_->have_poly) throw std::logic_error("interpolate() has not run");
    const auto& coef = impl_->poly.at(b);
    if (k < 0 || k >= static_cast<int>(coef.size())) return Matrix<Rational>(coef[0].rows(), coef[0].cols());
    return coef[k];
}

std::vector<Rational> SymmetricReduction::lift(size_t block, const std::vector<Rational>& coef) const {
    const auto& im = *impl_;
    const auto& info = im.infos.at(block);
    const auto& bd = im.bdata[block];
    const Space& sp = *im.nodes[info.degree].at(bd.xkey).space;
    FullVec acc;
    for (size_t i = 0; i < bd.S.size(); ++i) {
        if (sgn(coef[i]) == 0) continue;
        for (const auto& [key, vec] : sp.vector(bd.S[i])) {
            auto& a = acc[key];
            if (a.empty()) a.assign(im.dt, Rational(0));
            axpy(a, coef[i], vec);
        }
    }
    acc = apply_group_sum(im.opgroups.at(info.sigma), bd.column_op, acc, im.n, nullptr);
    MonomialBasis mb(im.n, info.degree);
    std::vector<Rational> out(mb.size() * im.dt, Rational(0));
    for (const auto& [key, vec] : acc) {
        int idx = mb.find(decode(key, im.n));
        for (int t = 0; t < im.dt; ++t) out[idx * im.dt + t] = vec[t];
    }
    return out;
}

int symmetric_power_multiplicity(const ReflectionGroup& g, const Irrep& tau, int m, const Irrep& sigma) {
    if (g.kind() != GroupKind::Symmetric || !tau.seminormal || !sigma.seminormal)
        throw std::invalid_argument("symmetric_power_multiplicity needs S_n irreps");
    int n = g.dim_h();
    Rational total(0);
    long nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    for (const auto& lam : partitions_of(n)) {
        std::vector<int> w(n);
        int pos = 0;
        long z = 1;
        std::map<int, int> counts;
        for (int len : lam.parts()) {
            for (int i = 0; i < len; ++i) w[pos + i] = pos + (i + 1) % len;
            pos += len;
            z *= len;
            z *= ++counts[len];
        }
        // coefficient of t^m in prod 1/(1 - t^len)
        std::vector<long> ser(m + 1, 0);
        ser[0] = 1;
        for (int len : lam.parts())
            for (int d = len; d <= m; ++d) ser[d] += ser[d - len];
        Rational a(0), b(0);
        auto Mt = tau.seminormal->permutation(w);
        auto Ms = sigma.seminormal->permutation(w);
        for (size_t i = 0; i < Mt.rows(); ++i) a += Mt(i, i);
        for (size_t i = 0; i < Ms.rows(); ++i) b += Ms(i, i);
        total += Rational(nfact / z) * a * b * Rational(ser[m]);
    }
    total /= nfact;
    total.canonicalize();
    if (total.get_den() != 1) throw std::logic_error("non-integral multiplicity");
    return static_cast<int>(total.get_num().get_si());
}

}  // namespace rca
