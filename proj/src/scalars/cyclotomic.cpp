#include "rca/scalars/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rca {

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

std::vector<long long> poly_div_exact(std::vector<long long> a, const std::vector<long long>& b) {
    // b monic
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    std::vector<long long> q(da - db + 1, 0);
    for (int k = da; k >= db; --k) {
        long long t = a[k];
        q[k - db] = t;
        for (int j = 0; j <= db; ++j) a[k - db + j] -= t * b[j];
    }
    return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<long long>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<long long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        auto jt = cache.find(d);
        std::vector<long long> phid;
        if (jt == cache.end()) {
            // compute recursively without holding the lock twice
            std::vector<long long> q(d + 1, 0);
            q[0] = -1;
            q[d] = 1;
            for (int e = 1; e < d; ++e)
                if (d % e == 0) q = poly_div_exact(q, cache.at(e));
            cache[d] = q;
            phid = q;
        } else {
            phid = jt->second;
        }
        p = poly_div_exact(p, phid);
    }
    return cache[n] = p;
}

Cyclotomic Cyclotomic::reduce(int n, std::vector<Rational> poly) {
    const auto& phi = cyclotomic_polynomial(n);
    int d = static_cast<int>(phi.size()) - 1;
    for (int k = static_cast<int>(poly.size()) - 1; k >= d; --k) {
        if (sgn(poly[k]) == 0) continue;
        Rational t = poly[k];
        for (int j = 0; j < d; ++j)
            if (phi[j] != 0) poly[k - d + j] -= t * static_cast<long>(phi[j]);
        poly[k] = 0;
    }
    poly.resize(d);
    return Cyclotomic(n, std::move(poly));
}

Cyclotomic Cyclotomic::zeta(int n, long e) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    return from_terms(n, {{e, Rational(1)}});
}

Cyclotomic Cyclotomic::from_terms(int n, const std::vector<std::pair<long, Rational>>& terms) {
    std::vector<Rational> poly(n);
    for (const auto& [e, q] : terms) {
        long r = ((e % n) + n) % n;
        poly[r] += q;
    }
    return reduce(n, std::move(poly));
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

bool Cyclotomic::is_real() const { return is_rational() || *this == conj(); }

Cyclotomic Cyclotomic::galois(long k) const {
    if (n_ <= 2) return *this;
    std::vector<Rational> poly(n_);
    for (size_t e = 0; e < c_.size(); ++e) {
        if (sgn(c_[e]) == 0) continue;
        long r = ((static_cast<long>(e) * k) % n_ + n_) % n_;
        poly[r] += c_[e];
    }
    return reduce(n_, std::move(poly));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::lifted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
    int f = m / n_;
    std::vector<Rational> poly(m);
    for (size_t e = 0; e < c_.size(); ++e) poly[(e * f) % m] += c_[e];
    return reduce(m, std::move(poly));
}

void Cyclotomic::unify(Cyclotomic& o) {
    if (n_ == o.n_) return;
    int l = std::lcm(n_, o.n_);
    if (n_ != l) *this = lifted(l);
    if (o.n_ != l) o = o.lifted(l);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (n_ == o.n_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    } else if (o.n_ == 1) {
        c_[0] += o.c_[0];
    } else {
        Cyclotomic b = o;
        unify(b);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (n_ == o.n_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    } else if (o.n_ == 1) {
        c_[0] -= o.c_[0];
    } else {
        Cyclotomic b = o;
        unify(b);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
    for (auto& x : c_) x *= q;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.n_ == 1) return *this *= o.c_[0];
    if (n_ == 1) {
        Rational q = c_[0];
        *this = o;
        return *this *= q;
    }
    Cyclotomic b = o;
    unify(b);
    size_t d = c_.size();
    if (d == 1) {
        c_[0] *= b.c_[0];
        return *this;
    }
    std::vector<Rational> poly(2 * d - 1);
    for (size_t i = 0; i < d; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            poly[i + j] += c_[i] * b.c_[j];
        }
    }
    *this = reduce(n_, std::move(poly));
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
    size_t d = c_.size();
    if (d == 1) return Cyclotomic(n_, {1 / c_[0]});
    // columns of the multiplication-by-this matrix, solve M y = e_0
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
    for (size_t j = 0; j < d; ++j) {
        Cyclotomic col = *this * zeta(n_, static_cast<long>(j));
        for (size_t i = 0; i < d; ++i) a[i][j] = col.c_[i];
    }
    a[0][d] = 1;
    for (size_t col = 0; col < d; ++col) {
        size_t piv = col;
        while (piv < d && sgn(a[piv][col]) == 0) ++piv;
        if (piv == d) throw std::domain_error("singular multiplication matrix");
        std::swap(a[piv], a[col]);
        Rational inv = 1 / a[col][col];
        for (size_t k = col; k <= d; ++k) a[col][k] *= inv;
        for (size_t r = 0; r < d; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col];
            for (size_t k = col; k <= d; ++k) a[r][k] -= f * a[col][k];
        }
    }
    std::vector<Rational> y(d);
    for (size_t i = 0; i < d; ++i) y[i] = a[i][d];
    return Cyclotomic(n_, std::move(y));
}

std::vector<std::pair<int, Rational>> Cyclotomic::terms() const {
    std::vector<std::pair<int, Rational>> out;
    for (size_t e = 0; e < c_.size(); ++e)
        if (sgn(c_[e]) != 0) out.emplace_back(static_cast<int>(e), c_[e]);
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
    Cyclotomic x = a, y = b;
    x.unify(y);
    return x.c_ == y.c_;
}

Cyclotomic normalize(const Cyclotomic& x) {
    int n = x.order();
    if (x.is_rational()) return Cyclotomic(x.rational_part());
    for (int m = 3; m < n; ++m) {
        if (n % m) continue;
        if (m % 4 == 2) continue;  // Q(zeta_m) = Q(zeta_{m/2}) for such m
        bool fixed = true;
        for (int k = 1; k < n && fixed; k += m)
            if (std::gcd(k, n) == 1 && x.galois(k) != x) fixed = false;
        if (!fixed) continue;
        // solve for coefficients in the power basis of Q(zeta_m)
        int dm = euler_phi(m), dn = euler_phi(n);
        std::vector<std::vector<Rational>> a(dn, std::vector<Rational>(dm + 1));
        for (int j = 0; j < dm; ++j) {
            auto col = Cyclotomic::zeta(m, j).lifted(n);
            for (int i = 0; i < dn; ++i) a[i][j] = col.coeffs()[i];
        }
        for (int i = 0; i < dn; ++i) a[i][dm] = x.coeffs()[i];
        size_t row = 0;
        std::vector<int> pivcol;
        for (int col = 0; col < dm; ++col) {
            size_t piv = row;
            while (piv < a.size() && sgn(a[piv][col]) == 0) ++piv;
            if (piv == a.size()) continue;
            std::swap(a[piv], a[row]);
            Rational inv = 1 / a[row][col];
            for (int k = col; k <= dm; ++k) a[row][k] *= inv;
            for (size_t r = 0; r < a.size(); ++r) {
                if (r == row || sgn(a[r][col]) == 0) continue;
                Rational f = a[r][col];
                for (int k = col; k <= dm; ++k) a[r][k] -= f * a[row][k];
            }
            pivcol.push_back(col);
            ++row;
        }
        std::vector<std::pair<long, Rational>> t;
        for (size_t r = 0; r < pivcol.size(); ++r) t.emplace_back(pivcol[r], a[r][dm]);
        return Cyclotomic::from_terms(m, t);
    }
    return x;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t e = 0; e < c_.size(); ++e) {
        if (sgn(c_[e]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << to_string(c_[e]);
        if (e > 0) os << "*z" << n_ << "^" << e;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.str(); }

}  // namespace rca
