#include "rca/typea/partition.hpp"

#include <algorithm>
#include <sstream>

namespace rca {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw PartitionParse("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw PartitionParse("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw PartitionParse("bad partition: " + s);
        }
        while (pos < tok.size() && tok[pos] == ' ') ++pos;
        if (pos != tok.size()) throw PartitionParse("bad partition: " + s);
        parts.push_back(v);
    }
    if (parts.empty()) throw PartitionParse("empty partition");
    return Partition(parts);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition(c);
    for (int j = 1; j <= parts_[0]; ++j) {
        int len = 0;
        for (int p : parts_)
            if (p >= j) ++len;
        c.push_back(len);
    }
    return Partition(c);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[i]; ++j) out.push_back({i + 1, j + 1});
    return out;
}

long Partition::content() const {
    long s = 0;
    for (const auto& c : cells()) s += c.content();
    return s;
}

int Partition::hook_length(int row, int col) const {
    int arm = parts_[row - 1] - col;
    int leg = 0;
    for (int r = row; r < length(); ++r)
        if (parts_[r] >= col) ++leg;
    return arm + leg + 1;
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

bool Partition::is_rectangle() const {
    return !parts_.empty() && parts_.front() == parts_.back();
}

bool Partition::dominates(const Partition& o) const {
    int a = 0, b = 0;
    size_t len = std::max(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < len; ++i) {
        a += i < parts_.size() ? parts_[i] : 0;
        b += i < o.parts_.size() ? o.parts_[i] : 0;
        if (a < b) return false;
    }
    return true;
}

namespace {
void gen_partitions(int rem, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (rem == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(rem - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

long long count_syt(const Partition& p) {
    long long num = 1;
    for (int k = 2; k <= p.n(); ++k) num *= k;
    long long den = 1;
    for (const auto& c : p.cells()) den *= p.hook_length(c.row, c.col);
    return num / den;
}

}  // namespace rca
