#pragma once
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace rca {

struct PartitionParse : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Cell {
    int row, col;  // 1-based, as in the usual English diagram
    int content() const { return col - row; }
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates

    static Partition parse(const std::string& s);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[i]; }

    Partition conjugate() const;
    std::vector<Cell> cells() const;  // row by row
    long content() const;             // sum of col - row
    int hook_length(int row, int col) const;
    std::string str() const;
    bool is_rectangle() const;

    // weakly-dominates: sum of first k parts >= the other's for all k
    bool dominates(const Partition& o) const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All partitions of n, in decreasing lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

// Number of standard Young tableaux (hook length formula).
long long count_syt(const Partition& p);

}  // namespace rca
