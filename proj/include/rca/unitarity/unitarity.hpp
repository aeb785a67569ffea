#pragma once
#include <optional>
#include <string>
#include <vector>

#include "rca/groups/reflection_group.hpp"
#include "rca/scalars/serialize.hpp"
#include "rca/unitarity/locus.hpp"

namespace rca {

enum class VerdictKind { NonUnitary, ConsistentUpTo };

struct Verdict {
    VerdictKind kind = VerdictKind::ConsistentUpTo;
    int checked_degree = 0;
    // NonUnitary only: a vector of degree witness_degree (Verma basis: monomial index * dim tau + t)
    int witness_degree = -1;
    std::vector<Cyclotomic> witness;
    Cyclotomic witness_norm;
    std::string witness_type;  // W-type of the witness where known
    // ConsistentUpTo only: dimension of the radical of the form in each degree
    std::vector<long> kernel_dims;

    bool non_unitary() const { return kind == VerdictKind::NonUnitary; }
    json to_json() const;
};

// Parameters: one real rational per reflection class (Coxeter groups), or
// b_1..b_{m-1} for cyclic groups.
Verdict certify_point(GroupPtr g, const Irrep& tau, const std::vector<Rational>& c, int D);

// Same, always through the full Gram matrices (no isotypic reduction).
Verdict certify_point_generic(GroupPtr g, const Irrep& tau, const std::vector<Rational>& c, int D);

struct SweepEntry {
    std::vector<Rational> point;
    std::optional<Verdict> verdict;
    std::string error;
};

// workers <= 0: RCA_WORKERS from the environment, else the hardware concurrency
std::vector<SweepEntry> sweep(GroupPtr g, const Irrep& tau, const std::vector<std::vector<Rational>>& grid, int D,
                              int workers = 0);

struct Degree1Condition {
    std::string sigma;
    Cyclotomic value;  // 1 + h_c(tau) - h_c(sigma), real
    bool satisfied;
};

struct NecessaryConditions {
    std::optional<bool> hc_nonneg;  // Coxeter groups only
    Cyclotomic hc;                  // lowest h-weight on the essential part of h
    std::vector<Degree1Condition> degree1;
    bool all_satisfied() const;
};

NecessaryConditions necessary_conditions(GroupPtr g, const Irrep& tau, const std::vector<Rational>& c);

// member iff the entries n - b_n preceding the first zero are positive
bool predictor_rank1(int m, const std::vector<Rational>& b);

LocusDescription predictor_dihedral(const ReflectionGroup& g, const Irrep& tau);

// unitarity locus of the i-th exterior power of the reflection representation
// along the equal-parameter line
LocusDescription predictor_coxeter_exterior(const ReflectionGroup& g, int i);
// label of that exterior power
std::string exterior_power_label(const ReflectionGroup& g, int i);

struct MMData {
    std::vector<int> degrees;
};

int mm_pole_order(const MMData& data, const Rational& c);

// beta(v, v) computed by repeated Dunkl lowering (no Gram matrix); S_n only
Rational lowering_norm(GroupPtr g, const Irrep& tau, const std::vector<Rational>& c, int m,
                       const std::vector<Rational>& v);

// Farey-type grid: reduced fractions p/q in [lo, hi] with q <= max_den, ascending
std::vector<Rational> farey_grid(const Rational& lo, const Rational& hi, int max_den);

}  // namespace rca
