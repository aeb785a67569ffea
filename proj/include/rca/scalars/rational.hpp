#pragma once
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rca {

// mpq_class keeps numerator/denominator reduced once canonicalize() has run,
// which every arithmetic operator of gmpxx does for us.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& s);

// mpq_class(p, q) does not reduce; this does.
inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline int sign(const Rational& q) { return sgn(q); }

// floor of a rational, as an mpz
mpz_class floor_q(const Rational& q);

}  // namespace rca
