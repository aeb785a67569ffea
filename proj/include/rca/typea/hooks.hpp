#pragma once
#include <stdexcept>
#include <utility>
#include <vector>

#include "rca/groups/reflection_group.hpp"
#include "rca/scalars/param_poly.hpp"
#include "rca/typea/partition.hpp"
#include "rca/unitarity/locus.hpp"

namespace rca {

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct HookStats {
    int ell = 0;     // largest hook, tau_1 + length - 1
    int m_star = 0;  // multiplicity of the largest part
    int N = 0;       // ell - m_star + 1
    long content = 0;
};

HookStats hook_stats(const Partition& tau);

// i copies of the largest part lose a box, and i parts equal to 1 are appended
Partition tau_shift(const Partition& tau, int i);

// prod_{k=0}^{i-1} (1 - (N + k) c)
ParamPoly f_closed(const Partition& tau, int i);

// unitarity locus in c of L_c(tau) for S_n
LocusDescription genera_locus(const Partition& tau);

struct KasataniWeight {
    Partition tau;
    Rational degree;  // degree of the lowest singular vectors of that type
};

// lowest weights of the composition factors at c = r/m
std::vector<KasataniWeight> kasatani_weights(int n, int r, int m);

// kappa = s/r in lowest terms; true iff s >= N(tau*)
bool p_kappa_member(const Partition& tau, const Rational& kappa);

}  // namespace rca
