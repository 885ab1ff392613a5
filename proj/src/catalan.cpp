#include "delta/catalan.hpp"

#include <algorithm>
#include <stdexcept>

namespace delta {

namespace {
bool dinv_pair(const AreaVec& a, int i, int j) {  // 0-based, i < j
    return a[i] == a[j] || a[i] == a[j] + 1;
}

MultiPoly mono(int q, int t, int z, int w) {
    Mono m;
    m.set(Q, q);
    m.set(T, t);
    m.set(Z, z);
    m.set(W, w);
    return MultiPoly(m, 1);
}

// prod over rises of (1 + w t^{-a_i}) times t^area, as (t exponent, w exponent) terms
MultiPoly rise_factor(const AreaVec& a) {
    MultiPoly acc = mono(0, area(a), 0, 0);
    for (int r : rises(a)) {
        std::vector<int32_t> shift(W + 1, 0);
        shift[T] = -a[r - 1];
        shift[W] = 1;
        acc += acc.shift(shift);
    }
    return acc;
}

// prod over the given q-exponents e of (1 + z q^{-e}), times q^dinv
MultiPoly z_factor(int dinv, const std::vector<int>& drops) {
    MultiPoly acc = mono(dinv, 0, 0, 0);
    for (int e : drops) {
        std::vector<int32_t> shift(Z + 1, 0);
        shift[Q] = -e;
        shift[Z] = 1;
        acc += acc.shift(shift);
    }
    return acc;
}
}  // namespace

std::vector<int> catalan_dinv_vector(const AreaVec& a) {
    int n = static_cast<int>(a.size());
    std::vector<int> d(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dinv_pair(a, i, j)) ++d[i];
    return d;
}

int catalan_dinv(const AreaVec& a) {
    int s = 0;
    for (int v : catalan_dinv_vector(a)) s += v;
    return s;
}

std::vector<int> catalan_valleys(const AreaVec& a) {
    std::vector<int> v;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] <= a[i - 1]) v.push_back(static_cast<int>(i) + 1);
    return v;
}

std::vector<int> reading_order(const AreaVec& a) {
    std::vector<int> rows(a.size());
    for (size_t i = 0; i < a.size(); ++i) rows[i] = static_cast<int>(i) + 1;
    std::sort(rows.begin(), rows.end(), [&](int i, int j) {
        if (a[i - 1] != a[j - 1]) return a[i - 1] > a[j - 1];
        return i > j;
    });
    return rows;
}

std::vector<int> reading_b(const AreaVec& a) {
    auto order = reading_order(a);
    std::vector<int> b(order.size(), 0);
    for (size_t p = 0; p < order.size(); ++p)
        for (size_t q = 0; q < p; ++q) {
            int i = std::min(order[p], order[q]) - 1, j = std::max(order[p], order[q]) - 1;
            if (dinv_pair(a, i, j)) ++b[p];
        }
    return b;
}

std::vector<int> reading_b_rises(const AreaVec& a) {
    auto b = reading_b(a);
    std::vector<int> out;
    for (size_t p = 1; p < b.size(); ++p)
        if (b[p] > b[p - 1]) out.push_back(static_cast<int>(p) + 1);
    return out;
}

std::vector<int> peak_rows(const AreaVec& a) {
    std::vector<int> out;
    for (size_t i = 0; i < a.size(); ++i)
        if (i + 1 == a.size() || a[i + 1] <= a[i]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

int touch_count(const AreaVec& a) {
    return static_cast<int>(std::count(a.begin(), a.end(), 0));
}

MultiPoly cat4(int n, int touch) {
    MultiPoly out;
    for (const auto& a : dyck_paths(n)) {
        if (touch >= 0 && touch_count(a) != touch) continue;
        auto d = catalan_dinv_vector(a);
        std::vector<int> drops;
        for (int v : catalan_valleys(a)) drops.push_back(d[v - 1] + 1);
        out += z_factor(catalan_dinv(a), drops) * rise_factor(a);
    }
    return out;
}

MultiPoly catmod4(int n, int touch) {
    MultiPoly out;
    for (const auto& a : dyck_paths(n)) {
        if (touch >= 0 && touch_count(a) != touch) continue;
        auto b = reading_b(a);
        std::vector<int> drops;
        for (int p : reading_b_rises(a)) drops.push_back(b[p - 1]);
        out += z_factor(catalan_dinv(a), drops) * rise_factor(a);
    }
    return out;
}

Composition touch_composition(const AreaVec& a, const std::vector<int>& stars) {
    int n = static_cast<int>(a.size());
    std::vector<int> touches;
    for (int i = 0; i < n; ++i)
        if (a[i] == 0) touches.push_back(i + 1);
    touches.push_back(n + 1);
    Composition alpha;
    for (size_t j = 0; j + 1 < touches.size(); ++j) {
        int lo = touches[j], hi = touches[j + 1];
        int inside = 0;
        for (int s : stars)
            if (s > lo && s < hi) ++inside;
        alpha.push_back(hi - lo - inside);
    }
    return alpha;
}

MultiPoly catmod4_comp(int n, const Composition& alpha) {
    MultiPoly out;
    for (const auto& a : dyck_paths(n)) {
        if (touch_count(a) != static_cast<int>(alpha.size())) continue;
        auto R = rises(a);
        auto b = reading_b(a);
        std::vector<int> drops;
        for (int p : reading_b_rises(a)) drops.push_back(b[p - 1]);
        MultiPoly zpart = z_factor(catalan_dinv(a), drops);
        for (unsigned mask = 0; mask < (1u << R.size()); ++mask) {
            std::vector<int> stars;
            int lost = 0;
            for (size_t i = 0; i < R.size(); ++i)
                if (mask >> i & 1) stars.push_back(R[i]), lost += a[R[i] - 1];
            if (touch_composition(a, stars) != alpha) continue;
            out += zpart * mono(0, area(a) - lost, 0, 0);
        }
    }
    return out;
}

RatFunc schur_coeff(const SymFunc& f, const Partition& lam) {
    auto ex = schur_expand(f);
    auto it = ex.coeffs.find(lam);
    return it == ex.coeffs.end() ? RatFunc() : it->second;
}

SymFunc gamma_op(int j, const SymFunc& f) {
    if (j == 0) return f;
    if (j == 1 || j == 2) return delta_op(SymFunc::h(j), f);
    throw std::invalid_argument("gamma_op: j must be 0, 1 or 2");
}

namespace {
Partition hook_shape(int m, int k) {  // (k+1, 1^{m-k-1})
    Partition p{k + 1};
    for (int i = 0; i < m - k - 1; ++i) p.push_back(1);
    return p;
}
}  // namespace

RatFunc hook_side(int j, const SymFunc& f, int k) {
    int m = f.deg();
    if (k < 0 || k >= m) return RatFunc();
    return schur_coeff(gamma_op(j, nabla(f)), hook_shape(m, k));
}

RatFunc e_side(int j, const SymFunc& f, int k) {
    int m = f.deg();
    if (k < 0 || k >= m) return RatFunc();
    return schur_coeff(gamma_op(j, delta_prime(SymFunc::e(m - k - 1), f)), Partition(m, 1));
}

RatFunc cat_coeff_nabla(int n, int k, int l) {
    if (k < 0 || l < 0 || k + l >= n) return RatFunc();
    SymFunc g = nabla(SymFunc::e(n - k));
    if (k) g = delta_op(SymFunc::h(k), g);
    return schur_coeff(g, hook_shape(n - k, l));
}

RatFunc cat_coeff_delta_prime(int n, int k, int l) {
    if (k < 0 || l < 0 || k + l >= n) return RatFunc();
    SymFunc g = delta_prime(SymFunc::e(n - k - l - 1), SymFunc::e(n - k));
    if (k) g = delta_op(SymFunc::h(k), g);
    return schur_coeff(g, Partition(n - k, 1));
}

}  // namespace delta
