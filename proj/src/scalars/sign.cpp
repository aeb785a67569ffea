#include "rca/scalars/sign.hpp"

#include <mpfr.h>

#include <cmath>

namespace rca {

namespace {

struct Mp {
    mpfr_t v;
    explicit Mp(int bits) { mpfr_init2(v, bits); }
    ~Mp() { mpfr_clear(v); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
};

// real part of x at the given precision; also returns sum |a_e| in `mass`
void eval_real(const Cyclotomic& x, int bits, mpfr_t out, double* mass) {
    Mp pi(bits + 16), ang(bits + 16), c(bits + 16), a(bits + 16);
    mpfr_const_pi(pi.v, MPFR_RNDN);
    mpfr_set_zero(out, 1);
    double m = 0;
    int n = x.order();
    for (const auto& [e, q] : x.terms()) {
        mpfr_set_q(a.v, q.get_mpq_t(), MPFR_RNDN);
        m += std::fabs(q.get_d());
        if (e == 0) {
            mpfr_add(out, out, a.v, MPFR_RNDN);
            continue;
        }
        mpfr_mul_ui(ang.v, pi.v, 2UL * static_cast<unsigned long>(e), MPFR_RNDN);
        mpfr_div_ui(ang.v, ang.v, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_cos(c.v, ang.v, MPFR_RNDN);
        mpfr_mul(c.v, c.v, a.v, MPFR_RNDN);
        mpfr_add(out, out, c.v, MPFR_RNDN);
    }
    if (mass) *mass = m;
}

}  // namespace

SignCertificate certify_sign(const Cyclotomic& x, int ceiling_bits) {
    if (x.is_rational()) {
        int s = sgn(x.rational_part());
        return {x, static_cast<Sign>(s), 0};
    }
    if (!x.is_real()) throw NotReal("certify_sign on a non-real cyclotomic: " + x.str());
    if (x.is_zero()) return {x, Sign::Zero, 0};
    int n = x.order();
    for (int bits = kSignStartBits; bits <= ceiling_bits; bits *= 2) {
        Mp v(bits + 16);
        double mass = 0;
        eval_real(x, bits, v.v, &mass);
        // every term carries relative error a few ulps at bits+16; bound generously
        Mp err(64);
        mpfr_set_d(err.v, (mass + 1.0) * (n + 8), MPFR_RNDU);
        mpfr_mul_2si(err.v, err.v, -(bits - 4), MPFR_RNDU);
        Mp absv(bits + 16);
        mpfr_abs(absv.v, v.v, MPFR_RNDN);
        if (mpfr_cmp(absv.v, err.v) > 0)
            return {x, mpfr_sgn(v.v) > 0 ? Sign::Positive : Sign::Negative, bits};
    }
    throw PrecisionCeiling("sign undecided at " + std::to_string(ceiling_bits) + " bits: " + x.str());
}

int float_sign(const Cyclotomic& x, int bits) {
    Mp v(bits);
    eval_real(x, bits, v.v, nullptr);
    return mpfr_sgn(v.v) > 0 ? 1 : (mpfr_sgn(v.v) < 0 ? -1 : 0);
}

double to_double(const Cyclotomic& x) {
    Mp v(128);
    eval_real(x, 112, v.v, nullptr);
    return mpfr_get_d(v.v, MPFR_RNDN);
}

}  // namespace rca
