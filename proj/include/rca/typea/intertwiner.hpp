#pragma once
#include <string>
#include <vector>

#include "rca/scalars/serialize.hpp"

namespace rca {

// Identities for the intertwiners of M_kappa(triv) over S_n acting on C^n, with
// y_i f = kappa d_i f + sum_{k != i} (f - s_ik f)/(x_i - x_k) and
// z_i = y_i x_i - sum_{j<i} s_ij, checked on degrees 0..max_degree.
struct IntertwinerReport {
    int n = 0;
    Rational kappa;
    int max_degree = 0;
    Rational vacuum_z1;            // Psi Phi on the vacuum
    bool psi_phi = true;           // Psi Phi = z_1
    bool z_triangular = true;      // the z_i are simultaneously triangular on monomials
    bool eigenvectors_map = true;  // sigma_i f has weight s_i alpha
    bool sigma_square = true;      // sigma_i^2 = ((z_i - z_{i+1})^2 - 1)/(z_i - z_{i+1})^2
    bool sigma_self_adjoint = true;  // degrees <= 2
    bool phi_adjoint = true;         // Phi^* = Psi, degrees <= 2
    long eigenvectors = 0;
    long sigma_checks = 0;
    std::vector<std::string> skipped;  // (degree, i, weight) with alpha_i = alpha_{i+1}

    bool ok() const {
        return psi_phi && z_triangular && eigenvectors_map && sigma_square && sigma_self_adjoint && phi_adjoint;
    }
    json to_json() const;
};

IntertwinerReport intertwiner_check(int n, const Rational& kappa, int max_degree);

}  // namespace rca
