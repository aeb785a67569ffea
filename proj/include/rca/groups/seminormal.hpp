#pragma once
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "rca/scalars/matrix.hpp"
#include "rca/typea/partition.hpp"

namespace rca {

// Young's seminormal form of the S_n irrep labelled by a partition.
// Basis: standard Young tableaux; entries are 0..n-1 internally.
class SeminormalRep {
public:
    explicit SeminormalRep(const Partition& shape);

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    int dim() const { return static_cast<int>(row_.size()); }

    // row_of(t)[k], col_of(t)[k]: 1-based cell holding entry k in tableau t
    const std::vector<int>& row_of(int t) const { return row_[t]; }
    const std::vector<int>& col_of(int t) const { return col_[t]; }

    // s_i swaps entries i and i+1, 0 <= i < n-1
    const Matrix<Rational>& adjacent(int i) const { return adj_[i]; }
    // positive diagonal invariant form
    const std::vector<Rational>& form() const { return form_; }

    // w[j] = image of j
    Matrix<Rational> permutation(const std::vector<int>& w) const;
    const Matrix<Rational>& transposition(int i, int j) const;

private:
    Partition shape_;
    std::vector<std::vector<int>> row_, col_;
    std::vector<Matrix<Rational>> adj_;
    std::vector<Rational> form_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<Matrix<Rational>>> transp_;
};

// Decomposes w into adjacent transpositions: w = s_{word[0]} s_{word[1]} ...
std::vector<int> adjacent_word(std::vector<int> w);

}  // namespace rca
