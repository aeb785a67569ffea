#include "rca/scalars/param_poly.hpp"

#include <sstream>

namespace rca {

ParamPoly::ParamPoly(const Cyclotomic& a) {
    if (!a.is_zero()) terms_.emplace(Exp{0, 0}, a);
}

ParamPoly ParamPoly::variable(int arity, int index) {
    if (arity < 1 || arity > 2 || index < 0 || index >= arity)
        throw ArityMismatch("bad parameter variable");
    ParamPoly p;
    p.arity_ = arity;
    p.terms_.emplace(index == 0 ? Exp{1, 0} : Exp{0, 1}, Cyclotomic(1));
    return p;
}

ParamPoly ParamPoly::constant(int arity, const Cyclotomic& a) {
    ParamPoly p(a);
    p.arity_ = arity;
    return p;
}

int ParamPoly::degree() const {
    int d = 0;
    for (const auto& [e, a] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

Cyclotomic ParamPoly::constant_term() const {
    auto it = terms_.find(Exp{0, 0});
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

Cyclotomic ParamPoly::coeff(int k) const {
    auto it = terms_.find(Exp{k, 0});
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void ParamPoly::adopt(const ParamPoly& o) {
    if (arity_ == 0) {
        arity_ = o.arity_;
    } else if (o.arity_ != 0 && o.arity_ != arity_) {
        throw ArityMismatch("combining polynomials of different arity");
    }
}

void ParamPoly::add_term(const Exp& e, const Cyclotomic& a) {
    if (a.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, a);
        return;
    }
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    adopt(o);
    for (const auto& [e, a] : o.terms_) add_term(e, a);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    adopt(o);
    for (const auto& [e, a] : o.terms_) add_term(e, -a);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Cyclotomic& a) {
    if (a.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= a;
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    adopt(o);
    if (o.is_constant()) return *this *= o.constant_term();
    std::map<Exp, Cyclotomic> old;
    old.swap(terms_);
    for (const auto& [e1, a1] : old)
        for (const auto& [e2, a2] : o.terms_) add_term({e1.first + e2.first, e1.second + e2.second}, a1 * a2);
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& [e, a] : r.terms_) a = -a;
    return r;
}

ParamPoly ParamPoly::conj() const {
    ParamPoly r = *this;
    for (auto& [e, a] : r.terms_) a = a.conj();
    return r;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, x] : a.terms_) {
        if (e != it->first || x != it->second) return false;
        ++it;
    }
    return true;
}

Cyclotomic ParamPoly::eval(const std::vector<Rational>& point) const {
    if (arity_ != 0 && static_cast<int>(point.size()) != arity_)
        throw ArityMismatch("evaluation point has wrong length");
    Cyclotomic r(0);
    for (const auto& [e, a] : terms_) {
        Rational m = 1;
        if (e.first) {
            if (point.empty()) throw ArityMismatch("evaluation point has wrong length");
            Rational p;
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), point[0].get_num_mpz_t(), e.first);
            mpz_pow_ui(den.get_mpz_t(), point[0].get_den_mpz_t(), e.first);
            p = Rational(num, den);
            m *= p;
        }
        if (e.second) {
            if (point.size() < 2) throw ArityMismatch("evaluation point has wrong length");
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), point[1].get_num_mpz_t(), e.second);
            mpz_pow_ui(den.get_mpz_t(), point[1].get_den_mpz_t(), e.second);
            m *= Rational(num, den);
        }
        Cyclotomic t = a;
        t *= m;
        r += t;
    }
    return r;
}

Cyclotomic poly_eval(const ParamPoly& p, const std::vector<Rational>& point) { return p.eval(point); }

std::pair<ParamPoly, ParamPoly> divmod_univariate(const ParamPoly& a, const ParamPoly& b) {
    if (a.arity() > 1 || b.arity() > 1) throw ArityMismatch("univariate division only");
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    int db = b.degree();
    Cyclotomic lead_inv = b.coeff(db).inverse();
    ParamPoly q, r = a;
    ParamPoly c = ParamPoly::variable(1, 0);
    while (!r.is_zero() && r.degree() >= db) {
        int dr = r.degree();
        ParamPoly t(r.coeff(dr) * lead_inv);
        for (int k = 0; k < dr - db; ++k) t *= c;
        q += t;
        r -= t * b;
    }
    return {q, r};
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, a] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << a.str() << ")";
        if (arity_ <= 1) {
            if (e.first) os << "*c^" << e.first;
        } else {
            if (e.first) os << "*c1^" << e.first;
            if (e.second) os << "*c2^" << e.second;
        }
    }
    return os.str();
}

}  // namespace rca
