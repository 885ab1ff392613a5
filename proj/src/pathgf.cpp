#include "delta/pathgf.hpp"

#include "labeler.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace delta {

std::vector<std::vector<int>> content_list(int n, int N, Contents mode) {
    std::vector<std::vector<int>> out;
    switch (mode) {
        case Contents::AllWords:
            return weak_compositions(n, N);
        case Contents::Compositions:
            for (const auto& c : compositions(n))
                if (static_cast<int>(c.size()) <= N) out.push_back(c);
            break;
        case Contents::Partitions:
            for (const auto& p : partitions(n))
                if (static_cast<int>(p.size()) <= N) out.push_back(p);
            break;
    }
    return out;
}

namespace {

using detail::Labeler;
using detail::Table;

// (t exponent, z exponent) -> multiplicity for the rise weight of one path
std::map<std::pair<int, int>, long long> rise_weights(const AreaVec& a, Route route) {
    std::map<std::pair<int, int>, long long> w;
    int ar = area(a);
    if (route == Route::Product) {
        w[{ar, 0}] = 1;
        for (int r : rises(a)) {
            std::map<std::pair<int, int>, long long> next;
            for (const auto& [k, c] : w) {
                next[k] += c;
                next[{k.first - a[r - 1], k.second + 1}] += c;
            }
            w = std::move(next);
        }
    } else if (route == Route::RiseDecorated) {
        auto R = rises(a);
        for (unsigned mask = 0; mask < (1u << R.size()); ++mask) {
            int minus = 0, cnt = 0;
            for (size_t b = 0; b < R.size(); ++b)
                if (mask >> b & 1) minus += a[R[b] - 1], ++cnt;
            ++w[{ar - minus, cnt}];
        }
    } else {
        auto F = falls(a);
        auto c = column_areas(a);
        for (unsigned mask = 0; mask < (1u << F.size()); ++mask) {
            int kept = 0, cnt = 0;
            for (int j = 0; j < static_cast<int>(c.size()); ++j) {
                bool chosen = false;
                for (size_t b = 0; b < F.size(); ++b)
                    if ((mask >> b & 1) && F[b] == j + 1) chosen = true;
                if (chosen)
                    ++cnt;
                else
                    kept += c[j];
            }
            ++w[{kept, cnt}];
        }
    }
    return w;
}

using MemoKey = std::tuple<bool, int, int, int, int, int>;

MultiPoly compute(bool valley, int n, const GfOptions& opt) {
    int N = opt.N ? opt.N : n;
    auto contents = content_list(n, N, opt.contents);
    int maxd = n * (n - 1) / 2;
    Table tb(static_cast<int>(contents.size()), maxd + 1, maxd + 1, std::max(n, 1));
    for (const auto& a : dyck_paths(n)) {
        int ar = area(a);
        if (!valley) {
            auto w = rise_weights(a, opt.route);
            if (static_cast<int>(rises(a).size()) < opt.min_z) continue;
            Labeler L(column_strict_rows(a), Labeler::level_pairs(a, std::vector<char>(a.size(), 1)), N, false);
            std::vector<long long> hist(maxd + 1);
            for (size_t ci = 0; ci < contents.size(); ++ci) {
                std::fill(hist.begin(), hist.end(), 0);
                L.set_content(contents[ci]);
                auto leaf = [&](int dv) { ++hist[dv]; };
                L.run(0, 0, leaf);
                for (int dv = 0; dv <= maxd; ++dv) {
                    if (!hist[dv]) continue;
                    for (const auto& [tz, c] : w) tb.at(static_cast<int>(ci), dv, tz.first, tz.second) += c * hist[dv];
                }
            }
        } else {
            int possible = 0;
            for (int i = 1; i < n; ++i)
                if (a[i] <= a[i - 1]) ++possible;
            if (possible < opt.min_z) continue;
            Labeler L(column_strict_rows(a), Labeler::level_pairs(a, std::vector<char>(a.size(), 1)), N, true);
            std::vector<int> vals;
            std::vector<long long> cur, nxt;
            int width = maxd + n + 2;
            for (size_t ci = 0; ci < contents.size(); ++ci) {
                L.set_content(contents[ci]);
                int cidx = static_cast<int>(ci);
                auto leaf = [&](int dv) {
                    vals.clear();
                    for (int i = 1; i < n; ++i)
                        if (a[i] < a[i - 1] || (a[i] == a[i - 1] && L.lab[i] > L.lab[i - 1])) vals.push_back(i);
                    if (opt.route == Route::Product) {
                        // cur[m * width + s]: choose m valleys with total shift s
                        int nv = static_cast<int>(vals.size());
                        cur.assign(size_t(nv + 1) * width, 0);
                        cur[0] = 1;
                        for (int idx = 0; idx < nv; ++idx) {
                            int sh = L.d[vals[idx]] + 1;
                            nxt = cur;
                            for (int m = 0; m < idx + 1; ++m)
                                for (int s = 0; s + sh < width; ++s)
                                    if (cur[m * width + s]) nxt[(m + 1) * width + s + sh] += cur[m * width + s];
                            cur.swap(nxt);
                        }
                        for (int m = 0; m <= nv; ++m)
                            for (int s = 0; s < width; ++s) {
                                long long c = cur[m * width + s];
                                if (!c) continue;
                                if (s > dv) throw std::logic_error("negative q-exponent in valley weight");
                                tb.at(cidx, dv - s, ar, m) += c;
                            }
                    } else {
                        int nv = static_cast<int>(vals.size());
                        for (unsigned mask = 0; mask < (1u << nv); ++mask) {
                            int e = 0, m = 0;
                            std::vector<bool> in(n, false);
                            for (int b = 0; b < nv; ++b)
                                if (mask >> b & 1) in[vals[b]] = true, ++m;
                            for (int i = 0; i < n; ++i)
                                if (!in[i]) e += L.d[i];
                            e -= m;
                            if (e < 0) throw std::logic_error("negative dinv- on a valley-decorated path");
                            tb.at(cidx, e, ar, m) += 1;
                        }
                    }
                };
                L.run(0, 0, leaf);
            }
        }
    }
    return tb.to_poly(contents);
}

MultiPoly memo_compute(bool valley, int n, const GfOptions& opt) {
    static std::mutex mu;
    static std::map<MemoKey, MultiPoly> memo;
    MemoKey key{valley, n, opt.N ? opt.N : n, static_cast<int>(opt.contents), static_cast<int>(opt.route), opt.min_z};
    {
        std::lock_guard lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    MultiPoly p = compute(valley, n, opt);
    std::lock_guard lock(mu);
    return memo.emplace(key, std::move(p)).first->second;
}

}  // namespace

MultiPoly rise_z_poly(int n, const GfOptions& opt) { return memo_compute(false, n, opt); }
MultiPoly val_z_poly(int n, const GfOptions& opt) { return memo_compute(true, n, opt); }

MultiPoly rise_gf(int n, int k, const GfOptions& opt) {
    if (k < 0 || k >= n) throw std::invalid_argument("need 0 <= k < n");
    return rise_z_poly(n, opt).coeff_extract(Z, n - k - 1);
}

MultiPoly val_gf(int n, int k, const GfOptions& opt) {
    if (k < 0 || k >= n) throw std::invalid_argument("need 0 <= k < n");
    return val_z_poly(n, opt).coeff_extract(Z, n - k - 1);
}

MultiPoly x_coeff(const MultiPoly& p, const std::vector<int>& content) {
    MultiPoly out;
    int top = X0 + static_cast<int>(content.size());
    for (const auto& [m, c] : p.terms()) {
        bool ok = true;
        for (int s = X0; s < std::max(m.size(), top); ++s) {
            int want = s < top ? content[s - X0] : 0;
            if (m[s] != want) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Mono r = m;
        for (int s = X0; s < m.size(); ++s) r.set(s, 0);
        out.add_term(r, c);
    }
    return out;
}

}  // namespace delta
