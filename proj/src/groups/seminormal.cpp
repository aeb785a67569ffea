#include "rca/groups/seminormal.hpp"

#include <deque>
#include <stdexcept>

namespace rca {

namespace {

void fill_tableaux(const Partition& p, int k, std::vector<int>& filled, std::vector<int>& row,
                   std::vector<int>& col, std::vector<std::vector<int>>& rows,
                   std::vector<std::vector<int>>& cols) {
    if (k == p.n()) {
        rows.push_back(row);
        cols.push_back(col);
        return;
    }
    for (int r = 0; r < p.length(); ++r) {
        if (filled[r] >= p[r]) continue;
        if (r > 0 && filled[r - 1] <= filled[r]) continue;
        row[k] = r + 1;
        col[k] = filled[r] + 1;
        ++filled[r];
        fill_tableaux(p, k + 1, filled, row, col, rows, cols);
        --filled[r];
    }
}

}  // namespace

SeminormalRep::SeminormalRep(const Partition& shape) : shape_(shape) {
    int n = shape.n();
    std::vector<int> filled(shape.length(), 0), row(n), col(n);
    fill_tableaux(shape, 0, filled, row, col, row_, col_);
    int d = dim();

    std::map<std::vector<int>, int> index;
    for (int t = 0; t < d; ++t) {
        std::vector<int> key = row_[t];
        key.insert(key.end(), col_[t].begin(), col_[t].end());
        index[key] = t;
    }
    auto partner = [&](int t, int i) {
        std::vector<int> r = row_[t], c = col_[t];
        std::swap(r[i], r[i + 1]);
        std::swap(c[i], c[i + 1]);
        r.insert(r.end(), c.begin(), c.end());
        return index.at(r);
    };

    for (int i = 0; i + 1 < n; ++i) {
        Matrix<Rational> m(d, d);
        for (int t = 0; t < d; ++t) {
            int r1 = row_[t][i], c1 = col_[t][i], r2 = row_[t][i + 1], c2 = col_[t][i + 1];
            if (r1 == r2) {
                m(t, t) = 1;
            } else if (c1 == c2) {
                m(t, t) = -1;
            } else {
                Rational a((c2 - r2) - (c1 - r1));
                int u = partner(t, i);
                m(t, t) = 1 / a;
                m(u, t) = r1 < r2 ? Rational(1) : Rational(1 - 1 / (a * a));
            }
        }
        adj_.push_back(std::move(m));
    }

    // invariant diagonal form by propagation along s_i-edges
    form_.assign(d, Rational(0));
    std::vector<bool> seen(d, false);
    std::deque<int> q{0};
    form_[0] = 1;
    seen[0] = true;
    while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int i = 0; i + 1 < n; ++i) {
            int r1 = row_[t][i], c1 = col_[t][i], r2 = row_[t][i + 1], c2 = col_[t][i + 1];
            if (r1 == r2 || c1 == c2) continue;
            int u = partner(t, i);
            if (seen[u]) continue;
            Rational a((c2 - r2) - (c1 - r1));
            Rational ratio = 1 - 1 / (a * a);
            form_[u] = r1 < r2 ? Rational(form_[t] * ratio) : Rational(form_[t] / ratio);
            seen[u] = true;
            q.push_back(u);
        }
    }
}

std::vector<int> adjacent_word(std::vector<int> w) {
    std::vector<int> rev;
    for (;;) {
        int i = 0;
        int n = static_cast<int>(w.size());
        while (i + 1 < n && w[i] < w[i + 1]) ++i;
        if (i + 1 >= n) break;
        // w = (w s_i) s_i
        std::swap(w[i], w[i + 1]);
        rev.push_back(i);
    }
    return {rev.rbegin(), rev.rend()};
}

Matrix<Rational> SeminormalRep::permutation(const std::vector<int>& w) const {
    Matrix<Rational> m = Matrix<Rational>::identity(dim());
    for (int i : adjacent_word(w)) m = m * adj_[i];
    return m;
}

const Matrix<Rational>& SeminormalRep::transposition(int i, int j) const {
    if (i > j) std::swap(i, j);
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = transp_[{i, j}];
    if (!slot) {
        std::vector<int> w(n());
        for (int k = 0; k < n(); ++k) w[k] = k;
        std::swap(w[i], w[j]);
        slot = std::make_unique<Matrix<Rational>>(j == i + 1 ? adj_[i] : permutation(w));
    }
    return *slot;
}

}  // namespace rca
