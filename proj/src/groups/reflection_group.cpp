#include "rca/groups/reflection_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rca/scalars/linalg.hpp"

namespace rca {

namespace {

int mod(long a, int n) { return static_cast<int>(((a % n) + n) % n); }

MonomialElement compose(const MonomialElement& g, const MonomialElement& h, int n) {
    size_t r = g.perm.size();
    MonomialElement out{std::vector<int>(r), std::vector<int>(r)};
    for (size_t j = 0; j < r; ++j) {
        int hj = h.perm[j];
        out.perm[j] = g.perm[hj];
        out.root[j] = mod(static_cast<long>(h.root[j]) + g.root[hj], n);
    }
    return out;
}

}  // namespace

void ReflectionGroup::index_elements() {
    lookup_.clear();
    for (size_t i = 0; i < elems_.size(); ++i) lookup_[elems_[i]] = i;
}

std::optional<size_t> ReflectionGroup::find(const MonomialElement& e) const {
    auto it = lookup_.find(e);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

size_t ReflectionGroup::multiply(size_t a, size_t b) const {
    return lookup_.at(compose(elems_[a], elems_[b], field_));
}

size_t ReflectionGroup::inverse(size_t a) const {
    const auto& g = elems_[a];
    size_t r = g.perm.size();
    MonomialElement inv{std::vector<int>(r), std::vector<int>(r)};
    for (size_t j = 0; j < r; ++j) {
        inv.perm[g.perm[j]] = static_cast<int>(j);
        inv.root[g.perm[j]] = mod(-g.root[j], field_);
    }
    return lookup_.at(inv);
}

size_t ReflectionGroup::perm_index(const std::vector<int>& w) const {
    return lookup_.at(MonomialElement{w, std::vector<int>(w.size(), 0)});
}

std::string ReflectionGroup::spec() const {
    switch (kind_) {
        case GroupKind::Symmetric: return "Sn:" + std::to_string(param_);
        case GroupKind::Cyclic: return "Cyc:" + std::to_string(param_);
        case GroupKind::DihedralOdd: return "DihOdd:" + std::to_string(param_);
        case GroupKind::DihedralEven: return "DihEven:" + std::to_string(param_);
    }
    return "?";
}

Matrix<Cyclotomic> ReflectionGroup::matrix_h(size_t gi) const {
    const auto& g = elems_[gi];
    Matrix<Cyclotomic> m(rank_, rank_);
    for (int j = 0; j < rank_; ++j) m(g.perm[j], j) = Cyclotomic::zeta(field_, g.root[j]);
    return m;
}

Matrix<Cyclotomic> ReflectionGroup::matrix_hstar(size_t gi) const {
    const auto& g = elems_[gi];
    Matrix<Cyclotomic> m(rank_, rank_);
    for (int j = 0; j < rank_; ++j) m(g.perm[j], j) = Cyclotomic::zeta(field_, -g.root[j]);
    return m;
}

long ReflectionGroup::act_monomial_root(size_t gi, const std::vector<int>& mu, std::vector<int>& nu) const {
    const auto& g = elems_[gi];
    nu.assign(mu.size(), 0);
    long e = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        nu[g.perm[i]] = mu[i];
        e -= static_cast<long>(g.root[i]) * mu[i];
    }
    return mod(e, field_);
}

std::pair<Cyclotomic, std::vector<int>> ReflectionGroup::act_monomial(size_t g, const std::vector<int>& mu) const {
    std::vector<int> nu;
    long e = act_monomial_root(g, mu, nu);
    return {Cyclotomic::zeta(field_, e), nu};
}

std::vector<std::vector<size_t>> ReflectionGroup::reflection_classes() const {
    std::vector<std::vector<size_t>> out(num_classes_);
    for (size_t k = 0; k < refl_.size(); ++k) out[refl_[k].class_index].push_back(k);
    return out;
}

const Irrep& ReflectionGroup::irrep(const std::string& label) const {
    for (const auto& r : *irreps_)
        if (r.label() == label) return r;
    // tolerate partitions written with spaces or characters written as integers
    if (kind_ == GroupKind::Symmetric) {
        Partition p = Partition::parse(label);
        for (const auto& r : *irreps_)
            if (r.partition && *r.partition == p) return r;
    }
    throw UnsupportedIrrep("no irrep '" + label + "' for " + spec());
}

void ReflectionGroup::finish_reflections(const std::vector<size_t>& refl_elements, const std::vector<int>& classes) {
    refl_.clear();
    for (size_t k = 0; k < refl_elements.size(); ++k) {
        size_t s = refl_elements[k];
        auto A = matrix_h(s) - Matrix<Cyclotomic>::identity(rank_);
        auto B = matrix_hstar(s) - Matrix<Cyclotomic>::identity(rank_);
        ReflectionDatum d;
        d.element_index = s;
        d.class_index = classes[k];
        int ca = -1, cb = -1;
        for (int j = 0; j < rank_ && (ca < 0 || cb < 0); ++j)
            for (int i = 0; i < rank_; ++i) {
                if (ca < 0 && !A(i, j).is_zero()) ca = j;
                if (cb < 0 && !B(i, j).is_zero()) cb = j;
            }
        for (int i = 0; i < rank_; ++i) {
            d.alpha_check.push_back(A(i, ca));
            d.alpha.push_back(B(i, cb));
        }
        Cyclotomic pairing(0);
        for (int i = 0; i < rank_; ++i) pairing += d.alpha[i] * d.alpha_check[i];
        Cyclotomic scale = Cyclotomic(2) * pairing.inverse();
        for (auto& a : d.alpha) a *= scale;
        auto sa = matrix_hstar(s).apply(d.alpha);
        for (int i = 0; i < rank_; ++i)
            if (!d.alpha[i].is_zero()) {
                d.lambda = sa[i] * d.alpha[i].inverse();
                break;
            }
        refl_.push_back(std::move(d));
    }
    num_classes_ = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
}

GroupPtr ReflectionGroup::symmetric(int n, int max_n) {
    if (n < 2 || n > max_n) throw OutOfRange("symmetric group rank out of range: " + std::to_string(n));
    auto g = std::shared_ptr<ReflectionGroup>(new ReflectionGroup());
    g->kind_ = GroupKind::Symmetric;
    g->param_ = n;
    g->rank_ = n;
    g->field_ = 1;
    g->coxeter_ = true;
    g->coxeter_number_ = n;
    for (int k = 2; k <= n; ++k) g->degrees_.push_back(k);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    do {
        g->elems_.push_back({w, std::vector<int>(n, 0)});
    } while (std::next_permutation(w.begin(), w.end()));
    g->index_elements();
    // transpositions carry the obvious data; no need for the generic search
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> t(n);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[i], t[j]);
            ReflectionDatum d;
            d.element_index = g->perm_index(t);
            d.alpha.assign(n, Cyclotomic(0));
            d.alpha_check.assign(n, Cyclotomic(0));
            d.alpha[i] = 1;
            d.alpha[j] = -1;
            d.alpha_check[i] = 1;
            d.alpha_check[j] = -1;
            d.lambda = -1;
            d.class_index = 0;
            g->refl_.push_back(std::move(d));
        }
    g->num_classes_ = 1;
    g->build_irreps();
    return g;
}

GroupPtr ReflectionGroup::cyclic(int m) {
    if (m < 2 || m > 12) throw OutOfRange("cyclic order out of range: " + std::to_string(m));
    auto g = std::shared_ptr<ReflectionGroup>(new ReflectionGroup());
    g->kind_ = GroupKind::Cyclic;
    g->param_ = m;
    g->rank_ = 1;
    g->field_ = m;
    g->coxeter_ = m == 2;
    g->coxeter_number_ = m;
    g->degrees_ = {m};
    // g^j acts on h by lambda^{-j}, hence on h* by lambda^{j}
    for (int j = 0; j < m; ++j) g->elems_.push_back({{0}, {mod(-j, m)}});
    g->index_elements();
    std::vector<size_t> refl;
    std::vector<int> cls;
    for (int j = 1; j < m; ++j) {
        refl.push_back(j);
        cls.push_back(j - 1);
    }
    g->finish_reflections(refl, cls);
    g->build_irreps();
    return g;
}

GroupPtr ReflectionGroup::dihedral_odd(int d) {
    int M = 2 * d + 1;
    if (d < 1 || 2 * M > 48) throw OutOfRange("odd dihedral parameter out of range: " + std::to_string(d));
    auto g = std::shared_ptr<ReflectionGroup>(new ReflectionGroup());
    g->kind_ = GroupKind::DihedralOdd;
    g->param_ = d;
    g->rank_ = 2;
    g->field_ = M;
    g->coxeter_ = true;
    g->coxeter_number_ = M;
    g->degrees_ = {2, M};
    for (int k = 0; k < M; ++k) g->elems_.push_back({{0, 1}, {mod(-k, M), mod(k, M)}});
    for (int k = 0; k < M; ++k) g->elems_.push_back({{1, 0}, {mod(k, M), mod(-k, M)}});
    g->index_elements();
    std::vector<size_t> refl;
    std::vector<int> cls;
    for (int k = 0; k < M; ++k) {
        refl.push_back(M + k);
        cls.push_back(0);
    }
    g->finish_reflections(refl, cls);
    g->build_irreps();
    return g;
}

GroupPtr ReflectionGroup::dihedral_even(int d) {
    int M = 2 * d;
    if (d < 2 || 2 * M > 48) throw OutOfRange("even dihedral parameter out of range: " + std::to_string(d));
    auto g = std::shared_ptr<ReflectionGroup>(new ReflectionGroup());
    g->kind_ = GroupKind::DihedralEven;
    g->param_ = d;
    g->rank_ = 2;
    g->field_ = M;
    g->coxeter_ = true;
    g->coxeter_number_ = M;
    g->degrees_ = {2, M};
    for (int k = 0; k < M; ++k) g->elems_.push_back({{0, 1}, {mod(-k, M), mod(k, M)}});
    for (int k = 0; k < M; ++k) g->elems_.push_back({{1, 0}, {mod(k, M), mod(-k, M)}});
    g->index_elements();
    std::vector<size_t> refl;
    std::vector<int> cls;
    // r^{2k} s is conjugate to s_1 = s, r^{2k+1} s to s_2 = r s
    for (int k = 0; k < M; ++k) {
        refl.push_back(M + k);
        cls.push_back(k % 2);
    }
    g->finish_reflections(refl, cls);
    g->build_irreps();
    return g;
}

GroupPtr ReflectionGroup::from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw UnknownGroupSpec("bad group spec: " + spec);
    std::string kind = spec.substr(0, colon);
    int p = 0;
    try {
        size_t pos = 0;
        p = std::stoi(spec.substr(colon + 1), &pos);
        if (pos != spec.size() - colon - 1) throw UnknownGroupSpec("bad group spec: " + spec);
    } catch (const std::logic_error&) {
        throw UnknownGroupSpec("bad group spec: " + spec);
    }
    if (kind == "Sn") return symmetric(p);
    if (kind == "Cyc") return cyclic(p);
    if (kind == "DihOdd") return dihedral_odd(p);
    if (kind == "DihEven") return dihedral_even(p);
    throw UnknownGroupSpec("unknown group kind: " + spec);
}

// ---------------------------------------------------------------------------

Irrep::Irrep(std::string label, int dim, size_t group_order, Maker make, Matrix<Cyclotomic> form)
    : label_(std::move(label)), dim_(dim), make_(std::move(make)), form_(std::move(form)),
      cache_(std::make_shared<Cache>()) {
    cache_->mats.resize(group_order);
}

const Matrix<Cyclotomic>& Irrep::matrix(size_t g) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& slot = cache_->mats[g];
    if (!slot) slot = std::make_unique<Matrix<Cyclotomic>>(make_(g));
    return *slot;
}

Cyclotomic Irrep::character(size_t g) const {
    const auto& m = matrix(g);
    Cyclotomic t(0);
    for (int i = 0; i < dim_; ++i) t += m(i, i);
    return t;
}

void ReflectionGroup::build_irreps() {
    irreps_ = std::make_shared<std::vector<Irrep>>();
    auto& out = *irreps_;
    size_t ord = elems_.size();
    auto scalar_irrep = [&](const std::string& label, std::function<Cyclotomic(size_t)> f) {
        Matrix<Cyclotomic> id = Matrix<Cyclotomic>::identity(1);
        out.emplace_back(label, 1, ord, [f](size_t g) {
            Matrix<Cyclotomic> m(1, 1);
            m(0, 0) = f(g);
            return m;
        }, id);
    };
    switch (kind_) {
        case GroupKind::Symmetric: {
            const ReflectionGroup* self = this;
            for (const auto& p : partitions_of(param_)) {
                auto sn = std::make_shared<const SeminormalRep>(p);
                Matrix<Cyclotomic> form(sn->dim(), sn->dim());
                for (int t = 0; t < sn->dim(); ++t) form(t, t) = sn->form()[t];
                Irrep ir(p.str(), sn->dim(), ord, [sn, self](size_t g) {
                    return convert<Cyclotomic>(sn->permutation(self->element(g).perm));
                }, form);
                ir.partition = p;
                ir.seminormal = sn;
                out.push_back(std::move(ir));
            }
            break;
        }
        case GroupKind::Cyclic: {
            int m = param_;
            for (int k = 0; k < m; ++k)
                scalar_irrep(std::to_string(k), [k, m](size_t j) { return Cyclotomic::zeta(m, static_cast<long>(k) * j); });
            break;
        }
        case GroupKind::DihedralOdd:
        case GroupKind::DihedralEven: {
            int M = field_;
            bool even = kind_ == GroupKind::DihedralEven;
            auto rot = [M](size_t g) { return static_cast<long>(g % M); };
            auto is_refl = [M](size_t g) { return g >= static_cast<size_t>(M); };
            scalar_irrep("triv", [](size_t) { return Cyclotomic(1); });
            scalar_irrep("sign", [is_refl](size_t g) { return Cyclotomic(is_refl(g) ? -1 : 1); });
            if (even) {
                scalar_irrep("eps1", [=](size_t g) {
                    long k = rot(g) + (is_refl(g) ? 1 : 0);
                    return Cyclotomic(k % 2 ? -1 : 1);
                });
                scalar_irrep("eps2", [=](size_t g) { return Cyclotomic(rot(g) % 2 ? -1 : 1); });
            }
            int top = even ? param_ - 1 : param_;
            for (int l = 1; l <= top; ++l) {
                out.emplace_back("tau" + std::to_string(l), 2, ord, [=](size_t g) {
                    Matrix<Cyclotomic> m(2, 2);
                    long k = rot(g);
                    if (!is_refl(g)) {
                        m(0, 0) = Cyclotomic::zeta(M, l * k);
                        m(1, 1) = Cyclotomic::zeta(M, -l * k);
                    } else {
                        m(0, 1) = Cyclotomic::zeta(M, l * k);
                        m(1, 0) = Cyclotomic::zeta(M, -l * k);
                    }
                    return m;
                }, Matrix<Cyclotomic>::identity(2));
            }
            break;
        }
    }
}

Irrep twist(const ReflectionGroup& g, const Irrep& chi, const Irrep& tau, const std::string& label) {
    if (chi.dim() != 1) throw UnsupportedIrrep("twist needs a one-dimensional character");
    Irrep chi_copy = chi, tau_copy = tau;
    Irrep out(label, tau.dim(), g.order(), [chi_copy, tau_copy](size_t w) {
        return tau_copy.matrix(w).scaled(chi_copy.character(w));
    }, tau.form());
    out.partition = std::nullopt;
    return out;
}

std::vector<std::pair<std::string, Matrix<Cyclotomic>>> isotypic_projectors(
    const ReflectionGroup& g, const std::function<Matrix<Cyclotomic>(size_t)>& rep, bool check_rep) {
    size_t ord = g.order();
    std::vector<Matrix<Cyclotomic>> mats;
    mats.reserve(ord);
    for (size_t w = 0; w < ord; ++w) mats.push_back(rep(w));
    if (check_rep) {
        // sample multiplicativity on a spread of pairs
        size_t step = std::max<size_t>(1, ord / 7);
        for (size_t a = 0; a < ord; a += step)
            for (size_t b = 0; b < ord; b += step)
                if (mats[a] * mats[b] != mats[g.multiply(a, b)])
                    throw NotARepresentation("rep(a)rep(b) != rep(ab)");
    }
    std::vector<std::pair<std::string, Matrix<Cyclotomic>>> out;
    size_t n = mats.empty() ? 0 : mats[0].rows();
    for (const auto& ir : g.irreps()) {
        Matrix<Cyclotomic> p(n, n);
        for (size_t w = 0; w < ord; ++w) {
            Cyclotomic chi = ir.character(g.inverse(w));
            if (chi.is_zero()) continue;
            p = p + mats[w].scaled(chi);
        }
        Cyclotomic scale(Rational(ir.dim()) / Rational(static_cast<long>(ord)));
        out.emplace_back(ir.label(), p.scaled(scale));
    }
    return out;
}

std::vector<Cyclotomic> reflection_eigenvalue_sum(const ReflectionGroup& g, const Irrep& sigma) {
    std::vector<Cyclotomic> out;
    for (const auto& cls : g.reflection_classes()) {
        Cyclotomic tr(0);
        for (size_t k : cls) tr += sigma.character(g.reflections()[k].element_index);
        tr *= Rational(1, sigma.dim());
        out.push_back(tr);
    }
    return out;
}

Cyclotomic character_inner(const ReflectionGroup& g, const std::vector<Cyclotomic>& chi, const Irrep& sigma) {
    Cyclotomic s(0);
    for (size_t w = 0; w < g.order(); ++w) s += chi[w] * sigma.character(w).conj();
    s *= Rational(1, static_cast<long>(g.order()));
    return s;
}

}  // namespace rca
