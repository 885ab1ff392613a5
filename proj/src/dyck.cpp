#include "delta/dyck.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace delta {

bool is_dyck(const AreaVec& a) {
    if (a.empty()) return true;
    if (a[0] != 0) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] < 0 || a[i] > a[i - 1] + 1) return false;
    return true;
}

namespace {
void grow(AreaVec& cur, int n, std::vector<AreaVec>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    int top = cur.empty() ? 0 : cur.back() + 1;
    for (int v = 0; v <= top; ++v) {
        cur.push_back(v);
        grow(cur, n, out);
        cur.pop_back();
    }
}
}  // namespace

const std::vector<AreaVec>& dyck_paths(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<AreaVec>> memo;
    std::lock_guard lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<AreaVec> out;
    AreaVec cur;
    if (n >= 0) grow(cur, n, out);
    return memo.emplace(n, std::move(out)).first->second;
}

int area(const AreaVec& a) {
    int s = 0;
    for (int v : a) s += v;
    return s;
}

std::vector<int> north_x(const AreaVec& a) {
    std::vector<int> x(a.size());
    for (size_t i = 0; i < a.size(); ++i) x[i] = static_cast<int>(i) - a[i];
    return x;
}

std::vector<int> east_y(const AreaVec& a) {
    int n = static_cast<int>(a.size());
    auto x = north_x(a);
    std::vector<int> y(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (x[i] <= j) y[j] = i + 1;
    return y;
}

std::vector<int> column_areas(const AreaVec& a) {
    auto y = east_y(a);
    std::vector<int> c(y.size());
    for (size_t j = 0; j < y.size(); ++j) c[j] = y[j] - static_cast<int>(j) - 1;
    return c;
}

std::vector<int> rises(const AreaVec& a) {
    std::vector<int> r;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] > a[i - 1]) r.push_back(static_cast<int>(i) + 1);
    return r;
}

std::vector<int> falls(const AreaVec& a) {
    auto y = east_y(a);
    std::vector<int> f;
    for (size_t j = 0; j + 1 < y.size(); ++j)
        if (y[j] == y[j + 1]) f.push_back(static_cast<int>(j) + 1);
    return f;
}

int matching_column(const AreaVec& a, int row) {
    int n = static_cast<int>(a.size());
    if (row < 1 || row > n) throw std::out_of_range("row");
    auto y = east_y(a);
    int x = row - 1 - a[row - 1];
    // first east step to the right of the north step that returns to level a_row
    for (int j = x; j < n; ++j)
        if (y[j] >= row && y[j] - (j + 1) == a[row - 1]) return j + 1;
    throw std::logic_error("unmatched north step");
}

bool is_labeled_path(const LabeledPath& p) {
    if (!is_dyck(p.a) || p.labels.size() != p.a.size()) return false;
    for (size_t i = 0; i < p.a.size(); ++i) {
        if (p.labels[i] <= 0) return false;
        if (i > 0 && p.a[i] == p.a[i - 1] + 1 && p.labels[i] <= p.labels[i - 1]) return false;
    }
    return true;
}

std::vector<int> dinv_vector(const LabeledPath& p) {
    int n = static_cast<int>(p.a.size());
    std::vector<int> d(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (p.a[i] == p.a[j] && p.labels[i] < p.labels[j]) ++d[i];
            if (p.a[i] == p.a[j] + 1 && p.labels[i] > p.labels[j]) ++d[i];
        }
    return d;
}

int dinv(const LabeledPath& p) {
    int s = 0;
    for (int v : dinv_vector(p)) s += v;
    return s;
}

std::vector<int> valleys(const LabeledPath& p) {
    std::vector<int> v;
    for (size_t i = 1; i < p.a.size(); ++i)
        if (p.a[i] < p.a[i - 1] || (p.a[i] == p.a[i - 1] && p.labels[i] > p.labels[i - 1]))
            v.push_back(static_cast<int>(i) + 1);
    return v;
}

Mono x_content(const std::vector<int>& labels) {
    Mono m;
    for (int l : labels)
        if (l > 0) m.set(xvar(l), m[xvar(l)] + 1);
    return m;
}

namespace {
void fill_words(const std::vector<char>& strict, int N, std::vector<int>& w, size_t i,
                const std::function<void(const std::vector<int>&)>& fn) {
    if (i == strict.size()) {
        fn(w);
        return;
    }
    int lo = (i > 0 && strict[i]) ? w[i - 1] + 1 : 1;
    for (int v = lo; v <= N; ++v) {
        w[i] = v;
        fill_words(strict, N, w, i + 1, fn);
    }
}
}  // namespace

void for_each_column_strict(const std::vector<char>& strict, int N, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> w(strict.size());
    fill_words(strict, N, w, 0, fn);
}

std::vector<char> column_strict_rows(const AreaVec& a) {
    std::vector<char> s(a.size(), 0);
    for (size_t i = 1; i < a.size(); ++i) s[i] = a[i] == a[i - 1] + 1;
    return s;
}

void for_each_labeled_path(int n, int N, const std::function<void(const LabeledPath&)>& fn) {
    LabeledPath p;
    for (const auto& a : dyck_paths(n)) {
        p.a = a;
        for_each_column_strict(column_strict_rows(a), N, [&](const std::vector<int>& w) {
            p.labels = w;
            fn(p);
        });
    }
}

namespace {
std::string list(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}
}  // namespace

std::string to_record(const LabeledPath& p, const std::vector<int>& dec) {
    return "a=" + list(p.a) + ";l=" + list(p.labels) + ";dec=" + list(dec);
}

}  // namespace delta
