#include "delta/partial.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace delta {

namespace {
bool is_valley_row(const AreaVec& a, int i) {  // 0-based
    return i > 0 && a[i] <= a[i - 1];
}

// ascending subsets of size l from pool, lex
void for_each_subset(const std::vector<int>& pool, int l, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick;
    std::function<void(size_t)> go = [&](size_t from) {
        if (static_cast<int>(pick.size()) == l) {
            fn(pick);
            return;
        }
        for (size_t i = from; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            go(i + 1);
            pick.pop_back();
        }
    };
    go(0);
}
}  // namespace

bool is_partial_path(const PartialPath& p) {
    if (!is_dyck(p.a) || p.labels.size() != p.a.size() || p.a.empty()) return false;
    for (size_t i = 0; i < p.a.size(); ++i) {
        if (p.labels[i] < 0) return false;
        if (p.labels[i] == 0 && !is_valley_row(p.a, static_cast<int>(i))) return false;
        if (i > 0 && p.a[i] == p.a[i - 1] + 1 && p.labels[i] && p.labels[i - 1] && p.labels[i] <= p.labels[i - 1]) return false;
    }
    return true;
}

int empty_rows(const PartialPath& p) {
    return static_cast<int>(std::count(p.labels.begin(), p.labels.end(), 0));
}

std::vector<std::pair<int, int>> partial_dinv_pairs(const PartialPath& p) {
    std::vector<std::pair<int, int>> out;
    const auto& a = p.a;
    const auto& l = p.labels;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] == a[j] && l[i] < l[j]) || (a[i] == a[j] + 1 && l[i] > l[j]))
                out.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
    return out;
}

std::vector<int> partial_dinv_vector(const PartialPath& p, PartialDinv v) {
    const auto& a = p.a;
    const auto& l = p.labels;
    int n = static_cast<int>(a.size());
    std::vector<int> d(n, 0);
    if (v == PartialDinv::Zeros) {
        for (auto [i, j] : partial_dinv_pairs(p)) ++d[i - 1];
        return d;
    }
    for (int i = 0; i < n; ++i) {
        if (!l[i]) {
            d[i] = -1;
            continue;
        }
        for (int j = i + 1; j < n; ++j) {
            bool level = a[i] == a[j] || a[i] == a[j] + 1;
            if (!l[j]) {
                if (level) ++d[i];
            } else if ((a[i] == a[j] && l[i] < l[j]) || (a[i] == a[j] + 1 && l[i] > l[j])) {
                ++d[i];
            }
        }
    }
    return d;
}

int partial_dinv(const PartialPath& p, PartialDinv v) {
    int s = 0;
    for (int x : partial_dinv_vector(p, v)) s += x;
    return s;
}

int touch(const PartialPath& p) {
    int c = 0;
    for (size_t i = 0; i < p.a.size(); ++i)
        if (p.a[i] == 0 && p.labels[i]) ++c;
    return c;
}

void for_each_partial_path(int n, int l, int N, const std::function<void(const PartialPath&)>& fn) {
    if (n < 1 || l < 0) throw std::invalid_argument("for_each_partial_path: need n >= 1, l >= 0");
    for (const auto& a : dyck_paths(n + l)) {
        std::vector<int> pool;
        for (int i = 1; i < n + l; ++i)
            if (is_valley_row(a, i)) pool.push_back(i);
        auto strict_all = column_strict_rows(a);
        for_each_subset(pool, l, [&](const std::vector<int>& empty) {
            std::vector<int> rows;  // labeled rows
            std::vector<char> strict;
            for (int i = 0, e = 0; i < n + l; ++i) {
                if (e < l && empty[e] == i) {
                    ++e;
                    continue;
                }
                // an empty row is always the first of its column, so neighbours in rows are neighbours in the column
                strict.push_back(!rows.empty() && rows.back() == i - 1 && strict_all[i]);
                rows.push_back(i);
            }
            PartialPath p{a, std::vector<int>(n + l, 0)};
            for_each_column_strict(strict, N, [&](const std::vector<int>& w) {
                for (int r = 0; r < n; ++r) p.labels[rows[r]] = w[r];
                fn(p);
            });
        });
    }
}

MultiPoly partial_z_poly(int n, int l, PartialDinv v, int N, int touch_filter) {
    if (N == 0) N = n;
    MultiPoly out;
    for_each_partial_path(n, l, N, [&](const PartialPath& p) {
        if (touch_filter >= 0 && touch(p) != touch_filter) return;
        int d = partial_dinv(p, v);
        if (d < 0) throw std::domain_error("partial_z_poly: negative dinv on " + to_record(LabeledPath{p.a, p.labels}));
        Mono m = x_content(p.labels);
        m.set(Q, d);
        m.set(T, area(p.a));
        MultiPoly acc(m, 1);
        for (int r : rises(p.a)) {
            std::vector<int32_t> shift(Z + 1, 0);
            shift[T] = -p.a[r - 1];
            shift[Z] = 1;
            acc += acc.shift(shift);
        }
        out += acc;
    });
    return out;
}

MultiPoly partial_gf(int n, int l, int k, PartialDinv v, int N, int touch_filter) {
    return partial_z_poly(n, l, v, N, touch_filter).coeff_extract(Z, k);
}

int min_partial_dinv(int n, int l, PartialDinv v) {
    int best = INT_MAX;
    for_each_partial_path(n, l, n, [&](const PartialPath& p) { best = std::min(best, partial_dinv(p, v)); });
    return best;
}

}  // namespace delta
