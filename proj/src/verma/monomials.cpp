#include "rca/verma/monomials.hpp"

#include <stdexcept>

namespace rca {

namespace {
void gen(int rank, int rem, int pos, Exponents& cur, std::vector<Exponents>& out) {
    if (pos == rank - 1) {
        cur[pos] = rem;
        out.push_back(cur);
        return;
    }
    for (int e = rem; e >= 0; --e) {
        cur[pos] = e;
        gen(rank, rem - e, pos + 1, cur, out);
    }
}
}  // namespace

MonomialBasis::MonomialBasis(int rank, int degree) : rank_(rank), degree_(degree) {
    Exponents cur(rank, 0);
    gen(rank, degree, 0, cur, monos_);
    for (size_t i = 0; i < monos_.size(); ++i) index_[mono_key(monos_[i])] = static_cast<int>(i);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Rational factorial_product(const Exponents& mu) {
    mpz_class p = 1;
    for (int e : mu)
        for (int k = 2; k <= e; ++k) p *= k;
    return Rational(p);
}

SparsePoly divide_by_linear(SparsePoly f, const std::vector<Cyclotomic>& alpha) {
    int v = -1;
    for (int i = static_cast<int>(alpha.size()) - 1; i >= 0; --i)
        if (!alpha[i].is_zero()) {
            v = i;
            break;
        }
    if (v < 0) throw std::logic_error("division by the zero linear form");
    Cyclotomic inv = alpha[v].inverse();
    SparsePoly q;
    while (!f.empty()) {
        // term with the largest exponent of x_v
        auto best = f.begin();
        for (auto it = f.begin(); it != f.end(); ++it)
            if (it->first[v] > best->first[v]) best = it;
        if (best->first[v] == 0) throw std::logic_error("polynomial not divisible by linear form");
        Exponents mu = best->first;
        Cyclotomic t = best->second * inv;
        mu[v] -= 1;
        q[mu] += t;
        for (size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i].is_zero()) continue;
            Exponents nu = mu;
            nu[i] += 1;
            auto& slot = f[nu];
            slot -= t * alpha[i];
            if (slot.is_zero()) f.erase(nu);
        }
    }
    for (auto it = q.begin(); it != q.end();)
        it = it->second.is_zero() ? q.erase(it) : std::next(it);
    return q;
}

}  // namespace rca
