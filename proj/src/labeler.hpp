#pragma once
// Shared machinery for summing over labelings of a fixed row shape.

#include "delta/multipoly.hpp"
#include "delta/rational.hpp"

#include <vector>

namespace delta::detail {

// Dense (content, q, t, z) -> count accumulator.
struct Table {
    int nc, dq, dt, dz;
    std::vector<long long> v;
    Table(int nc_, int dq_, int dt_, int dz_) : nc(nc_), dq(dq_), dt(dt_), dz(dz_), v(size_t(nc_) * dq_ * dt_ * dz_, 0) {}
    long long& at(int c, int q, int t, int z) { return v[((size_t(c) * dq + q) * dt + t) * dz + z]; }

    MultiPoly to_poly(const std::vector<std::vector<int>>& contents) {
        MultiPoly out;
        for (int c = 0; c < nc; ++c) {
            Mono base;
            for (size_t i = 0; i < contents[c].size(); ++i) base.set(xvar(static_cast<int>(i) + 1), contents[c][i]);
            for (int q = 0; q < dq; ++q)
                for (int t = 0; t < dt; ++t)
                    for (int z = 0; z < dz; ++z) {
                        long long x = at(c, q, t, z);
                        if (!x) continue;
                        Mono m = base;
                        m.set(Q, q);
                        m.set(T, t);
                        m.set(Z, z);
                        out.add_term(m, Rational(static_cast<long>(x)));
                    }
        }
        return out;
    }
};

// Column-strict labelings of a row sequence with a fixed content. The tracked
// statistic counts pairs (i, j), i < j, listed in partners[j] as (i, less):
// the pair counts when l_i < l_j if less, when l_i > l_j otherwise.
struct Labeler {
    using Partners = std::vector<std::vector<std::pair<int, bool>>>;
    int n, N;
    std::vector<char> strict;  // row i must exceed row i-1
    Partners partners;
    std::vector<int> rem, lab, d;
    bool track_d;

    Labeler(std::vector<char> strict_, Partners partners_, int N_, bool track)
        : n(static_cast<int>(strict_.size())), N(N_), strict(std::move(strict_)), partners(std::move(partners_)), lab(n), d(n), track_d(track) {}

    // the dinv shape: level_i = level_j with l_i < l_j, or level_i = level_j + 1 with l_i > l_j, i restricted to src
    static Partners level_pairs(const std::vector<int>& level, const std::vector<char>& src) {
        int n = static_cast<int>(level.size());
        Partners p(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                if (!src[i]) continue;
                if (level[i] == level[j]) p[j].push_back({i, true});
                if (level[i] == level[j] + 1) p[j].push_back({i, false});
            }
        return p;
    }

    void set_content(const std::vector<int>& content) {
        rem.assign(N, 0);
        for (size_t i = 0; i < content.size(); ++i) rem[i] = content[i];
    }

    template <class Leaf>
    void run(int row, int dv, Leaf& leaf) {
        if (row == n) {
            leaf(dv);
            return;
        }
        int lo = (row > 0 && strict[row]) ? lab[row - 1] + 1 : 1;
        for (int v = lo; v <= N; ++v) {
            if (!rem[v - 1]) continue;
            --rem[v - 1];
            lab[row] = v;
            int inc = 0;
            for (auto [i, less] : partners[row])
                if (less ? lab[i] < v : lab[i] > v) {
                    ++inc;
                    if (track_d) ++d[i];
                }
            run(row + 1, dv + inc, leaf);
            if (track_d)
                for (auto [i, less] : partners[row])
                    if (less ? lab[i] < v : lab[i] > v) --d[i];
            ++rem[v - 1];
        }
    }
};

}  // namespace delta::detail
