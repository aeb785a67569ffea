#pragma once
#include <stdexcept>

#include "rca/scalars/cyclotomic.hpp"

namespace rca {

struct NotReal : std::domain_error {
    using std::domain_error::domain_error;
};
struct PrecisionCeiling : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

struct SignCertificate {
    Cyclotomic value;
    Sign sign;
    int precision_bits;  // 0 when decided without floating evaluation
};

constexpr int kSignStartBits = 64;
constexpr int kSignCeilingBits = 4096;

SignCertificate certify_sign(const Cyclotomic& x, int ceiling_bits = kSignCeilingBits);

inline int sign_of(const Cyclotomic& x) { return static_cast<int>(certify_sign(x).sign); }
inline int sign_of(const Rational& q) { return sgn(q); }

// Plain (uncertified) evaluation of the real part at the given precision; returns
// its sign. Used as an independent cross-check.
int float_sign(const Cyclotomic& x, int bits);
double to_double(const Cyclotomic& x);

}  // namespace rca
