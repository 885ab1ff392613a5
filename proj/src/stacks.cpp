#include "delta/stacks.hpp"

#include "labeler.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace delta {

using detail::Labeler;
using detail::Table;

std::vector<int> stack_columns(int n, const std::vector<int>& diag) {
    std::vector<int> s(n, 0);
    for (int i = 0; i < n; ++i)
        for (int d : diag)
            if (d >= 2 && d <= i + 1) ++s[i];
    return s;
}

bool is_stack_shape(const StackShape& sh) {
    int n = static_cast<int>(sh.x.size());
    if (sh.diag.empty() || sh.diag[0] != 1) return false;
    for (size_t i = 1; i < sh.diag.size(); ++i)
        if (sh.diag[i] <= sh.diag[i - 1] || sh.diag[i] > n) return false;
    if (n == 0) return false;
    auto s = stack_columns(n, sh.diag);
    for (int i = 0; i < n; ++i) {
        if (sh.x[i] < 0 || sh.x[i] > s[i]) return false;
        if (i > 0 && sh.x[i] < sh.x[i - 1]) return false;
    }
    return true;
}

std::vector<char> stack_strict_rows(const std::vector<int>& x) {
    std::vector<char> st(x.size(), 0);
    for (size_t i = 1; i < x.size(); ++i) st[i] = x[i] == x[i - 1];
    return st;
}

bool is_stack_path(const StackPath& p) {
    if (!is_stack_shape(p.shape()) || p.labels.size() != p.x.size()) return false;
    auto st = stack_strict_rows(p.x);
    for (size_t i = 0; i < p.x.size(); ++i) {
        if (p.labels[i] <= 0) return false;
        if (st[i] && p.labels[i] <= p.labels[i - 1]) return false;
    }
    return true;
}

std::vector<int> stack_area_vector(const StackShape& sh) {
    auto s = stack_columns(static_cast<int>(sh.x.size()), sh.diag);
    std::vector<int> a(sh.x.size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = s[i] - sh.x[i];
    return a;
}

int stack_area(const StackShape& sh) {
    int t = 0;
    for (int v : stack_area_vector(sh)) t += v;
    return t;
}

std::vector<int> stack_heights(const StackShape& sh) {
    int n = static_cast<int>(sh.x.size());
    auto s = stack_columns(n, sh.diag);
    std::vector<int> first(n + 1, -1);
    for (int i = n - 1; i >= 0; --i) first[s[i]] = i;
    std::vector<int> h(n);
    for (int i = 0; i < n; ++i) h[i] = i - first[sh.x[i]];
    return h;
}

namespace {

std::vector<char> diag_mask(int n, const std::vector<int>& diag) {
    std::vector<char> m(n, 0);
    for (int d : diag) m[d - 1] = 1;
    return m;
}

int pair_count(const std::vector<int>& level, const std::vector<char>& src, const std::vector<int>& lab) {
    int n = static_cast<int>(level.size()), c = 0;
    for (int i = 0; i < n; ++i) {
        if (!src[i]) continue;
        for (int j = i + 1; j < n; ++j) {
            if (level[i] == level[j] && lab[i] < lab[j]) ++c;
            if (level[i] == level[j] + 1 && lab[i] > lab[j]) ++c;
        }
    }
    return c;
}

}  // namespace

int wdinv(const StackPath& p) {
    int n = static_cast<int>(p.x.size());
    int k = static_cast<int>(p.diag.size()) - 1;
    return pair_count(stack_area_vector(p.shape()), diag_mask(n, p.diag), p.labels) - (n - k - 1);
}

int hdinv(const StackPath& p) {
    return pair_count(stack_heights(p.shape()), std::vector<char>(p.x.size(), 1), p.labels);
}

std::vector<int> reading_word(const StackPath& p) {
    auto h = stack_heights(p.shape());
    std::vector<int> idx(p.x.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        if (h[i] != h[j]) return h[i] > h[j];
        return p.x[i] > p.x[j];
    });
    std::vector<int> w;
    for (int i : idx) w.push_back(p.labels[i]);
    return w;
}

bool is_yamanouchi(const std::vector<int>& w) {
    int top = 0;
    for (int v : w) top = std::max(top, v);
    std::vector<int> cnt(top + 2, 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int v = *it;
        if (v <= 0) return false;
        ++cnt[v];
        if (v > 1 && cnt[v] > cnt[v - 1]) return false;
    }
    return true;
}

namespace {

void grow_x(std::vector<int>& x, const std::vector<int>& s, std::vector<StackShape>& out, const std::vector<int>& diag) {
    size_t i = x.size();
    if (i == s.size()) {
        out.push_back({diag, x});
        return;
    }
    int lo = i ? x.back() : 0;
    for (int v = lo; v <= s[i]; ++v) {
        x.push_back(v);
        grow_x(x, s, out, diag);
        x.pop_back();
    }
}

void choose_diag(int n, int k, int from, std::vector<int>& diag, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(diag.size()) == k + 1) {
        out.push_back(diag);
        return;
    }
    for (int r = from; r <= n; ++r) {
        diag.push_back(r);
        choose_diag(n, k, r + 1, diag, out);
        diag.pop_back();
    }
}

}  // namespace

std::vector<StackShape> stack_shapes(int n, int k) {
    std::vector<StackShape> out;
    if (n < 1 || k < 0 || k >= n) return out;
    std::vector<std::vector<int>> diags;
    std::vector<int> diag{1};
    choose_diag(n, k, 2, diag, diags);
    for (const auto& d : diags) {
        auto s = stack_columns(n, d);
        std::vector<int> x;
        grow_x(x, s, out, d);
    }
    return out;
}

void for_each_stack_path(int n, int k, int N, const std::function<void(const StackPath&)>& fn) {
    StackPath p;
    for (const auto& sh : stack_shapes(n, k)) {
        p.diag = sh.diag;
        p.x = sh.x;
        for_each_column_strict(stack_strict_rows(sh.x), N, [&](const std::vector<int>& w) {
            p.labels = w;
            fn(p);
        });
    }
}

// ---- phi / psi

namespace {

void require_subset(const std::vector<int>& sub, const std::vector<int>& legal, const char* what) {
    for (size_t i = 0; i < sub.size(); ++i) {
        if (i && sub[i] <= sub[i - 1]) throw std::invalid_argument(std::string(what) + " set must be strictly increasing");
        if (std::find(legal.begin(), legal.end(), sub[i]) == legal.end())
            throw std::invalid_argument(std::string(what) + " " + std::to_string(sub[i]) + " is not legal for this path");
    }
}

std::vector<int> complement_diag(int n, const std::vector<int>& removed) {
    std::vector<int> d;
    for (int r = 1; r <= n; ++r)
        if (std::find(removed.begin(), removed.end(), r) == removed.end()) d.push_back(r);
    return d;
}

std::vector<int> non_diag(int n, const std::vector<int>& diag) {
    std::vector<int> v;
    for (int r = 2; r <= n; ++r)
        if (std::find(diag.begin(), diag.end(), r) == diag.end()) v.push_back(r);
    return v;
}

}  // namespace

int area_minus(const LabeledPath& p, const std::vector<int>& F) {
    auto c = column_areas(p.a);
    int s = 0;
    for (int j = 0; j < static_cast<int>(c.size()); ++j)
        if (std::find(F.begin(), F.end(), j + 1) == F.end()) s += c[j];
    return s;
}

int dinv_minus(const LabeledPath& p, const std::vector<int>& V) {
    auto d = dinv_vector(p);
    int s = 0;
    for (int i = 0; i < static_cast<int>(d.size()); ++i)
        if (std::find(V.begin(), V.end(), i + 1) == V.end()) s += d[i];
    return s - static_cast<int>(V.size());
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& s) {
    std::vector<std::vector<int>> out;
    for (unsigned m = 0; m < (1u << s.size()); ++m) {
        std::vector<int> v;
        for (size_t b = 0; b < s.size(); ++b)
            if (m >> b & 1) v.push_back(s[b]);
        out.push_back(v);
    }
    return out;
}

StackPath phi(const LabeledPath& p, const std::vector<int>& F) {
    if (!is_labeled_path(p)) throw std::invalid_argument("phi: not a labeled Dyck path");
    require_subset(F, falls(p.a), "fall");
    int n = static_cast<int>(p.a.size());
    std::vector<int> shifted;
    for (int j : F) shifted.push_back(j + 1);
    StackPath s;
    s.diag = complement_diag(n, shifted);
    auto x = north_x(p.a);
    s.x.resize(n);
    for (int i = 0; i < n; ++i) {
        int drop = 0;
        for (int j : F)
            if (j + 1 <= x[i]) ++drop;
        s.x[i] = x[i] - drop;
    }
    s.labels = p.labels;
    return s;
}

std::pair<LabeledPath, std::vector<int>> phi_inverse(const StackPath& s) {
    if (!is_stack_path(s)) throw std::invalid_argument("phi_inverse: not a stack path");
    int n = static_cast<int>(s.x.size());
    std::vector<int> F;
    for (int r : non_diag(n, s.diag)) F.push_back(r - 1);
    auto image = [&](int x) {
        int drop = 0;
        for (int j : F)
            if (j + 1 <= x) ++drop;
        return x - drop;
    };
    LabeledPath p;
    p.labels = s.labels;
    p.a.resize(n);
    for (int i = 0; i < n; ++i) {
        int x = 0;
        while (image(x) != s.x[i] || std::find(F.begin(), F.end(), x) != F.end()) ++x;
        p.a[i] = i - x;
    }
    if (!is_labeled_path(p) || phi(p, F) != s) throw std::logic_error("phi_inverse: no preimage");
    return {p, F};
}

StackPath psi(const LabeledPath& p, const std::vector<int>& V) {
    if (!is_labeled_path(p)) throw std::invalid_argument("psi: not a labeled Dyck path");
    require_subset(V, valleys(p), "valley");
    int n = static_cast<int>(p.a.size());
    StackPath s;
    s.diag = complement_diag(n, V);
    auto x = north_x(p.a);
    s.x.resize(n);
    for (int i = 0; i < n; ++i) {
        int drop = 0;
        for (int v : V)
            if (v <= i + 1) ++drop;
        s.x[i] = x[i] - drop;
    }
    s.labels = p.labels;
    return s;
}

std::pair<LabeledPath, std::vector<int>> psi_inverse(const StackPath& s) {
    if (!is_stack_path(s)) throw std::invalid_argument("psi_inverse: not a stack path");
    int n = static_cast<int>(s.x.size());
    auto V = non_diag(n, s.diag);
    LabeledPath p;
    p.labels = s.labels;
    p.a.resize(n);
    for (int i = 0; i < n; ++i) {
        int add = 0;
        for (int v : V)
            if (v <= i + 1) ++add;
        p.a[i] = i - (s.x[i] + add);
    }
    if (!is_labeled_path(p)) throw std::logic_error("psi_inverse: no preimage");
    auto val = valleys(p);
    for (int v : V)
        if (std::find(val.begin(), val.end(), v) == val.end()) throw std::logic_error("psi_inverse: vertical box off a valley");
    return {p, V};
}

// ---- dense paths

std::vector<DenseSquare> dense_frame(const AreaVec& b) {
    int m = static_cast<int>(b.size());
    auto x = north_x(b);
    std::vector<DenseSquare> sq;
    for (int g = 0; g < m; ++g) {
        int next = g + 1 < m ? x[g + 1] : m;
        sq.push_back({x[g], g, true, {}});
        for (int c = x[g] + 1; c <= std::min(next, g); ++c) sq.push_back({c, g, false, {}});
    }
    return sq;
}

namespace {

int find_square(const std::vector<DenseSquare>& sq, int col, int row) {
    for (size_t i = 0; i < sq.size(); ++i)
        if (sq[i].col == col && sq[i].row == row) return static_cast<int>(i);
    return -1;
}

}  // namespace

bool is_dense_path(const DensePath& d, bool east_below_north) {
    if (d.path.empty() || !is_dyck(d.path)) return false;
    auto frame = dense_frame(d.path);
    if (frame.size() != d.squares.size()) return false;
    for (size_t i = 0; i < frame.size(); ++i) {
        const auto& s = d.squares[i];
        if (s.col != frame[i].col || s.row != frame[i].row || s.north != frame[i].north) return false;
        if (s.north && s.entries.empty()) return false;
        for (size_t j = 0; j < s.entries.size(); ++j) {
            if (s.entries[j] <= 0) return false;
            if (j && s.entries[j] <= s.entries[j - 1]) return false;
        }
    }
    for (const auto& s : d.squares) {
        if (!s.north || s.row == 0) continue;
        int below = find_square(d.squares, s.col, s.row - 1);
        if (below < 0) continue;
        const auto& b = d.squares[below];
        if (!b.north && !east_below_north) continue;
        if (!b.entries.empty() && b.entries.back() >= s.entries.front()) return false;
    }
    return true;
}

int dense_size(const DensePath& d) {
    int n = 0;
    for (const auto& s : d.squares) n += static_cast<int>(s.entries.size());
    return n;
}

int dense_area(const DensePath& d) {
    int a = 0;
    for (const auto& s : d.squares) a += (s.row - s.col) * static_cast<int>(s.entries.size());
    return a;
}

int dense_wdinv(const DensePath& d, bool north_minima_only) {
    int count = 0, east = 0;
    for (const auto& sr : d.squares) {
        if (!sr.north) east += static_cast<int>(sr.entries.size());
        if (sr.entries.empty() || (north_minima_only && !sr.north)) continue;
        int r = sr.entries.front(), ar = sr.row - sr.col;
        for (const auto& ss : d.squares) {
            if (ss.col <= sr.col) continue;
            int as = ss.row - ss.col;
            for (int s : ss.entries) {
                if (r < s && ar == as) ++count;
                if (r > s && ar == as + 1) ++count;
            }
        }
    }
    return count - east;
}

Mono dense_content(const DensePath& d) {
    std::vector<int> labels;
    for (const auto& s : d.squares) labels.insert(labels.end(), s.entries.begin(), s.entries.end());
    return x_content(labels);
}

std::string to_string(const DensePath& d) {
    std::ostringstream os;
    for (size_t i = 0; i < d.squares.size(); ++i) {
        const auto& s = d.squares[i];
        os << (i ? " " : "") << '(' << s.col << ',' << s.row << "){";
        for (size_t j = 0; j < s.entries.size(); ++j) os << (j ? "," : "") << s.entries[j];
        os << '}';
    }
    return os.str();
}

DensePath theta(const StackPath& s) {
    if (!is_stack_path(s)) throw std::invalid_argument("theta: not a stack path");
    int n = static_cast<int>(s.x.size());
    int m = static_cast<int>(s.diag.size());
    DensePath d;
    d.path.resize(m);
    for (int g = 0; g < m; ++g) d.path[g] = g - s.x[s.diag[g] - 1];
    d.squares = dense_frame(d.path);
    int g = -1;
    for (int i = 0; i < n; ++i) {
        if (g + 1 < m && s.diag[g + 1] == i + 1) ++g;
        int at = find_square(d.squares, s.x[i], g);
        if (at < 0) throw std::logic_error("theta: row lands outside the frame");
        d.squares[at].entries.push_back(s.labels[i]);
    }
    return d;
}

StackPath theta_inverse(const DensePath& d) {
    if (!is_dense_path(d)) throw std::invalid_argument("theta_inverse: not a densely labeled path");
    StackPath s;
    for (const auto& sq : d.squares)
        for (size_t j = 0; j < sq.entries.size(); ++j) {
            if (sq.north && j == 0) s.diag.push_back(static_cast<int>(s.x.size()) + 1);
            s.x.push_back(sq.col);
            s.labels.push_back(sq.entries[j]);
        }
    if (!is_stack_path(s) || theta(s) != d) throw std::logic_error("theta_inverse: no preimage");
    return s;
}

namespace {

// entry sizes per square: north squares at least 1, total n
void size_splits(const std::vector<DenseSquare>& frame, size_t i, int left, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& fn) {
    if (i == frame.size()) {
        if (left == 0) fn(cur);
        return;
    }
    int lo = frame[i].north ? 1 : 0;
    int north_after = 0;
    for (size_t j = i + 1; j < frame.size(); ++j) north_after += frame[j].north;
    for (int v = lo; v + north_after <= left; ++v) {
        cur[i] = v;
        size_splits(frame, i + 1, left - v, cur, fn);
    }
}

struct DenseShape {
    std::vector<DenseSquare> frame;
    std::vector<int> sizes;
    std::vector<int> owner;  // square index of each entry slot
    std::vector<char> strict;
};

DenseShape make_shape(const std::vector<DenseSquare>& frame, const std::vector<int>& sizes, bool east_below_north) {
    DenseShape sh{frame, sizes, {}, {}};
    for (size_t q = 0; q < frame.size(); ++q)
        for (int j = 0; j < sizes[q]; ++j) {
            char st = 0;
            if (j > 0) {
                st = 1;
            } else if (frame[q].north && !sh.owner.empty()) {
                const auto& prev = frame[sh.owner.back()];
                if (prev.col == frame[q].col && prev.row == frame[q].row - 1 && (prev.north || east_below_north)) st = 1;
            }
            sh.owner.push_back(static_cast<int>(q));
            sh.strict.push_back(st);
        }
    return sh;
}

void for_each_dense_shape(int n, int k, bool east_below_north, const std::function<void(const DenseShape&)>& fn) {
    for (const auto& b : dyck_paths(k + 1)) {
        auto frame = dense_frame(b);
        std::vector<int> cur(frame.size());
        size_splits(frame, 0, n, cur, [&](const std::vector<int>& sizes) { fn(make_shape(frame, sizes, east_below_north)); });
    }
}

}  // namespace

void for_each_dense_path(int n, int k, int N, bool east_below_north, const std::function<void(const DensePath&)>& fn) {
    for_each_dense_shape(n, k, east_below_north, [&](const DenseShape& sh) {
        for_each_column_strict(sh.strict, N, [&](const std::vector<int>& w) {
            DensePath d;
            d.squares = sh.frame;
            d.path.clear();
            for (const auto& s : sh.frame)
                if (s.north) d.path.push_back(s.row - s.col);
            for (size_t i = 0; i < w.size(); ++i) d.squares[sh.owner[i]].entries.push_back(w[i]);
            fn(d);
        });
    });
}

// ---- generating functions

namespace {

template <class Body>
MultiPoly accumulate(int n, const GfOptions& opt, Body body) {
    int N = opt.N ? opt.N : n;
    auto contents = content_list(n, N, opt.contents);
    int maxd = n * (n - 1) / 2;
    Table tb(static_cast<int>(contents.size()), maxd + 1, maxd + 1, std::max(n, 1));
    for (int k = 0; k < n; ++k) {
        if (n - k - 1 < opt.min_z) continue;
        body(k, N, contents, tb);
    }
    return tb.to_poly(contents);
}

void sum_labelings(Labeler& L, const std::vector<std::vector<int>>& contents, Table& tb, int t, int z, int offset) {
    for (size_t ci = 0; ci < contents.size(); ++ci) {
        L.set_content(contents[ci]);
        int c = static_cast<int>(ci);
        auto leaf = [&](int dv) {
            if (dv - offset < 0) throw std::logic_error("negative q-exponent");
            tb.at(c, dv - offset, t, z) += 1;
        };
        L.run(0, 0, leaf);
    }
}

}  // namespace

MultiPoly stack_rise_z_poly(int n, const GfOptions& opt) {
    return accumulate(n, opt, [&](int k, int N, const auto& contents, Table& tb) {
        for (const auto& sh : stack_shapes(n, k)) {
            Labeler L(stack_strict_rows(sh.x), Labeler::level_pairs(stack_heights(sh), std::vector<char>(n, 1)), N, false);
            sum_labelings(L, contents, tb, stack_area(sh), n - k - 1, 0);
        }
    });
}

MultiPoly stack_val_z_poly(int n, const GfOptions& opt) {
    return accumulate(n, opt, [&](int k, int N, const auto& contents, Table& tb) {
        for (const auto& sh : stack_shapes(n, k)) {
            Labeler L(stack_strict_rows(sh.x), Labeler::level_pairs(stack_area_vector(sh), diag_mask(n, sh.diag)), N, false);
            sum_labelings(L, contents, tb, stack_area(sh), n - k - 1, n - k - 1);
        }
    });
}

MultiPoly dense_val_z_poly(int n, const GfOptions& opt, bool east_below_north) {
    return accumulate(n, opt, [&](int k, int N, const auto& contents, Table& tb) {
        for_each_dense_shape(n, k, east_below_north, [&](const DenseShape& sh) {
            int len = static_cast<int>(sh.owner.size());
            Labeler::Partners pr(len);
            int area = 0, east = 0;
            std::vector<char> is_min(len, 0);
            for (int e = 0; e < len; ++e) {
                const auto& s = sh.frame[sh.owner[e]];
                area += s.row - s.col;
                if (!s.north) ++east;
                is_min[e] = s.north && (e == 0 || sh.owner[e - 1] != sh.owner[e]);
            }
            for (int f = 0; f < len; ++f)
                for (int e = 0; e < f; ++e) {
                    const auto& se = sh.frame[sh.owner[e]];
                    const auto& sf = sh.frame[sh.owner[f]];
                    int ae = se.row - se.col, af = sf.row - sf.col;
                    if (is_min[e] && se.col < sf.col) {
                        if (ae == af) pr[f].push_back({e, true});
                        if (ae == af + 1) pr[f].push_back({e, false});
                    }
                    if (is_min[f] && sf.col < se.col) {
                        // f plays the minimal entry r, e plays s
                        if (af == ae) pr[f].push_back({e, false});
                        if (af == ae + 1) pr[f].push_back({e, true});
                    }
                }
            Labeler L(sh.strict, std::move(pr), N, false);
            sum_labelings(L, contents, tb, area, n - k - 1, east);
        });
    });
}

MultiPoly llt(const StackShape& sh, int N) {
    int n = static_cast<int>(sh.x.size());
    auto contents = weak_compositions(n, N);
    Table tb(static_cast<int>(contents.size()), n * (n - 1) / 2 + 1, 1, 1);
    Labeler L(stack_strict_rows(sh.x), Labeler::level_pairs(stack_heights(sh), std::vector<char>(n, 1)), N, false);
    sum_labelings(L, contents, tb, 0, 0, 0);
    return tb.to_poly(contents);
}

std::map<Partition, MultiPoly> yamanouchi_schur(const StackShape& sh) {
    int n = static_cast<int>(sh.x.size());
    std::map<Partition, MultiPoly> out;
    Labeler L(stack_strict_rows(sh.x), Labeler::level_pairs(stack_heights(sh), std::vector<char>(n, 1)), n, false);
    StackPath p{sh.diag, sh.x, {}};
    for (const auto& lam : partitions(n)) {
        L.set_content(lam);
        MultiPoly acc;
        auto leaf = [&](int dv) {
            p.labels = L.lab;
            if (is_yamanouchi(reading_word(p))) acc += MultiPoly::var(Q, dv);
        };
        L.run(0, 0, leaf);
        if (!acc.is_zero()) out[lam] = acc;
    }
    return out;
}

}  // namespace delta
