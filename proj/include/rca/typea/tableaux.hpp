#pragma once
#include <stdexcept>
#include <vector>

#include "rca/scalars/serialize.hpp"
#include "rca/typea/partition.hpp"

namespace rca {

struct NotDiagonalizable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Standard tableau on tau + Z p, p = (-m, kappa - m), m = length(tau),
// determined by its values on tau itself (the window) through T(b + p) = T(b) - n.
struct PeriodicTableau {
    Partition tau;
    Rational kappa;
    std::vector<int> window;  // values on tau.cells(), row by row

    int max_entry() const;
    json to_json() const;
};

struct ContentVector {
    std::vector<Rational> entries;  // ct(T^{-1}(1)), ..., ct(T^{-1}(n))
    std::vector<Rational> alpha;    // alpha_i = ct(T^{-1}(n - i + 1)) + kappa
};

ContentVector content_vector(const PeriodicTableau& T);

struct TableauEntry {
    PeriodicTableau tableau;
    ContentVector content;
};

// All standard periodic tableaux with window entries in [1, B], sorted by
// (max entry, window). kappa > 0 rational; throws NotDiagonalizable unless tau is in P_kappa.
std::vector<TableauEntry> enumerate_tableaux(const Partition& tau, const Rational& kappa, int B);

struct SpectrumCheck {
    TableauEntry entry;
    bool alpha1_nonneg;
    bool gaps_ok;  // (alpha_i - alpha_{i+1})^2 >= 1 for all i
    bool pass() const { return alpha1_nonneg && gaps_ok; }
};

std::vector<SpectrumCheck> spectra_unitary_check(const Partition& tau, const Rational& kappa, int B);

}  // namespace rca
