#pragma once
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rca/scalars/rational.hpp"

namespace rca {

int euler_phi(int n);
// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int n);

// Element of Q(zeta_N) stored in the power basis 1, z, ..., z^{phi(N)-1}.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1) {}
    Cyclotomic(const Rational& q) : n_(1), c_{q} {}  // NOLINT: implicit on purpose
    Cyclotomic(long v) : n_(1), c_{Rational(v)} {}   // NOLINT
    Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}  // NOLINT

    // zeta_N^e, any integer e
    static Cyclotomic zeta(int n, long e = 1);
    // sum of coeff * zeta_N^exp, exponents arbitrary integers
    static Cyclotomic from_terms(int n, const std::vector<std::pair<long, Rational>>& terms);

    int order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    const Rational& rational_part() const { return c_[0]; }  // exact value if is_rational()
    bool is_real() const;

    Cyclotomic conj() const;
    Cyclotomic galois(long k) const;  // zeta -> zeta^k, gcd(k, N) = 1
    Cyclotomic inverse() const;       // throws std::domain_error on zero
    Cyclotomic lifted(int m) const;   // same element written in Q(zeta_m), N | m

    // (exponent, coefficient) pairs of the power-basis representation, nonzero only
    std::vector<std::pair<int, Rational>> terms() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& q);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string str() const;

private:
    Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    static Cyclotomic reduce(int n, std::vector<Rational> poly);
    void unify(Cyclotomic& o);

    int n_;
    std::vector<Rational> c_;
};

// Rewrites x over the smallest Q(zeta_M) containing it.
Cyclotomic normalize(const Cyclotomic& x);

inline Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational conj(const Rational& q) { return q; }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace rca
