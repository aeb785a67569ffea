#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rca/groups/reflection_group.hpp"
#include "rca/scalars/matrix.hpp"

namespace rca {

// Multiplicity of sigma in tau (x) S^m C^n for S_n (character inner product).
int symmetric_power_multiplicity(const ReflectionGroup& g, const Irrep& tau, int m, const Irrep& sigma);

// Contravariant form of M_c(tau) for S_n, reduced to one Gram block per
// (degree, W-type). The block for sigma in degree m is the form on the
// multiplicity space Hom(sigma, tau (x) S^m h*), up to a positive scalar, so
// signatures and kernel dimensions (times dim sigma) are those of the full Gram.
//
// Blocks are computed from Gram matrices of invariant subspaces of Young
// subgroups, recursively in the degree; the structure is independent of c and
// built once, and blocks are polynomials in c of degree <= m.
class SymmetricReduction {
public:
    SymmetricReduction(GroupPtr g, const Irrep& tau, int max_degree);
    ~SymmetricReduction();

    struct BlockInfo {
        int degree;
        std::string sigma;
        int sigma_dim;
        int mult;
    };
    int max_degree() const;
    const std::vector<BlockInfo>& blocks() const;

    // direct computation at one point
    std::vector<Matrix<Rational>> evaluate_point(const Rational& c) const;
    // fits the polynomial blocks from runs at c = 0..max_degree (idempotent)
    void interpolate();
    bool interpolated() const;
    // evaluation of the fitted polynomials; interpolate() must have run
    std::vector<Matrix<Rational>> evaluate(const Rational& c) const;
    // coefficient of c^k of block b
    Matrix<Rational> coefficient(size_t b, int k) const;

    // full vector (Verma basis of the block's degree: monomial index * dim tau + t)
    // whose norm is a positive multiple of coef^T B coef
    std::vector<Rational> lift(size_t block, const std::vector<Rational>& coef) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace rca
