#pragma once
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "rca/scalars/cyclotomic.hpp"

namespace rca {

using Exponents = std::vector<int>;

// 8 bits per variable; fine for rank <= 8 and degree <= 255
inline uint64_t mono_key(const Exponents& mu) {
    uint64_t k = 0;
    for (size_t i = 0; i < mu.size(); ++i) k |= static_cast<uint64_t>(mu[i]) << (8 * i);
    return k;
}

class MonomialBasis {
public:
    MonomialBasis() = default;
    MonomialBasis(int rank, int degree);

    int rank() const { return rank_; }
    int degree() const { return degree_; }
    size_t size() const { return monos_.size(); }
    const Exponents& operator[](size_t i) const { return monos_[i]; }
    const std::vector<Exponents>& all() const { return monos_; }
    int find(const Exponents& mu) const {
        auto it = index_.find(mono_key(mu));
        return it == index_.end() ? -1 : it->second;
    }

private:
    int rank_ = 0, degree_ = 0;
    std::vector<Exponents> monos_;
    std::unordered_map<uint64_t, int> index_;
};

long long binomial(int n, int k);
Rational factorial_product(const Exponents& mu);  // mu!

// Sparse polynomial with cyclotomic coefficients, used for divided differences.
using SparsePoly = std::map<Exponents, Cyclotomic>;

// (f) / (sum_i alpha_i x_i); throws std::logic_error when not divisible
SparsePoly divide_by_linear(SparsePoly f, const std::vector<Cyclotomic>& alpha);

}  // namespace rca
