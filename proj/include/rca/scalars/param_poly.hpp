#pragma once
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rca/scalars/cyclotomic.hpp"

namespace rca {

struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Polynomial in one parameter c or two parameters (c1, c2).
// A polynomial built from a bare scalar has arity 0 and adopts the arity of
// whatever it is combined with.
class ParamPoly {
public:
    using Exp = std::pair<int, int>;

    ParamPoly() = default;
    ParamPoly(const Cyclotomic& a);  // NOLINT
    ParamPoly(const Rational& a) : ParamPoly(Cyclotomic(a)) {}  // NOLINT
    ParamPoly(long a) : ParamPoly(Cyclotomic(a)) {}             // NOLINT
    ParamPoly(int a) : ParamPoly(Cyclotomic(a)) {}              // NOLINT

    static ParamPoly variable(int arity, int index);  // c (index 0) or c1/c2
    static ParamPoly constant(int arity, const Cyclotomic& a);

    int arity() const { return arity_; }
    const std::map<Exp, Cyclotomic>& terms() const { return terms_; }
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Cyclotomic constant_term() const;
    // coefficient of c^k (arity <= 1)
    Cyclotomic coeff(int k) const;

    Cyclotomic eval(const std::vector<Rational>& point) const;
    ParamPoly conj() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const Cyclotomic& a);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
    ParamPoly operator-() const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b);
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void adopt(const ParamPoly& o);
    void add_term(const Exp& e, const Cyclotomic& a);

    int arity_ = 0;
    std::map<Exp, Cyclotomic> terms_;
};

inline ParamPoly conj(const ParamPoly& p) { return p.conj(); }
inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }

Cyclotomic poly_eval(const ParamPoly& p, const std::vector<Rational>& point);

// Exact division by a monic-in-c linear factor (1 - a c) style helpers are not needed;
// univariate quotient with remainder over Q(zeta) for arity-1 polynomials.
std::pair<ParamPoly, ParamPoly> divmod_univariate(const ParamPoly& a, const ParamPoly& b);

}  // namespace rca
