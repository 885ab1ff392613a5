#include "delta/xy.hpp"

#include <algorithm>
#include <stdexcept>

namespace delta {

XYDiagram xy_diagram(const StackPath& p) {
    if (!is_stack_path(p) || p.diag.size() > 2) throw std::invalid_argument("xy_diagram: needs a path under a stack with at most two columns");
    if (!is_yamanouchi(reading_word(p))) throw std::invalid_argument("xy_diagram: reading word is not Yamanouchi");
    auto h = stack_heights(p.shape());
    int top = *std::max_element(h.begin(), h.end());
    std::vector<std::array<int, 2>> label(top + 1, {0, 0});
    for (size_t i = 0; i < h.size(); ++i) label[h[i]][p.x[i]] = p.labels[i];
    XYDiagram d;
    d.area = stack_area(p.shape());
    std::vector<int> seen(p.labels.size() + 2, 0);
    for (const auto& row : label) {
        std::array<char, 2> r{' ', ' '};
        for (int c = 0; c < 2; ++c) {
            int v = row[c];
            if (!v) continue;
            if (v >= static_cast<int>(seen.size()) || seen[v] >= 2) throw std::invalid_argument("xy_diagram: label used more than twice");
            r[c] = seen[v]++ ? 'Y' : 'X';
        }
        d.rows.push_back(r);
    }
    return d;
}

StackPath xy_inverse(const XYDiagram& d) {
    std::vector<int> left, right;  // labels by height
    std::vector<int> right_h;
    int nx = 0, ny = 0;
    for (size_t hgt = 0; hgt < d.rows.size(); ++hgt)
        for (int c = 0; c < 2; ++c) {
            char ch = d.rows[hgt][c];
            if (ch == ' ') continue;
            int v = ch == 'X' ? ++nx : ch == 'Y' ? ++ny : 0;
            if (!v) throw std::invalid_argument("xy_inverse: bad letter");
            if (c == 0) {
                if (left.size() != hgt) throw std::invalid_argument("xy_inverse: left column has a gap");
                left.push_back(v);
            } else {
                if (!right_h.empty() && right_h.back() + 1 != static_cast<int>(hgt)) throw std::invalid_argument("xy_inverse: right column has a gap");
                right_h.push_back(static_cast<int>(hgt));
                right.push_back(v);
            }
        }
    int L = static_cast<int>(left.size()), n = L + static_cast<int>(right.size());
    StackPath p;
    if (right.empty() && d.area == 0) {
        p.diag = {1};
    } else {
        int start = right.empty() ? d.area : right_h.front();
        if (start != d.area) throw std::invalid_argument("xy_inverse: area does not match the right column");
        p.diag = {1, L + 1 - start};
    }
    p.x.assign(n, 0);
    std::fill(p.x.begin() + L, p.x.end(), 1);
    p.labels = left;
    p.labels.insert(p.labels.end(), right.begin(), right.end());
    if (!is_stack_path(p) || xy_diagram(p) != d) throw std::invalid_argument("xy_inverse: not the diagram of a path");
    return p;
}

int xy_hdinv(const XYDiagram& d) {
    int c = 0;
    for (size_t y = 0; y < d.rows.size(); ++y) {
        if (d.rows[y][0] == 'X' && d.rows[y][1] == 'X') ++c;
        if (d.rows[y][1] != ' ' && y + 1 < d.rows.size() && d.rows[y + 1][0] != ' ') ++c;
    }
    return c;
}

XYClass classify(const XYDiagram& d) {
    using Row = std::array<char, 2>;
    const Row LX{'X', ' '}, XY{'X', 'Y'}, XX{'X', 'X'}, RY{' ', 'Y'}, RX{' ', 'X'};
    const auto& r = d.rows;
    size_t i = 0, n = r.size();
    auto run = [&](const Row& kind) {
        int c = 0;
        while (i < n && r[i] == kind) ++i, ++c;
        return c;
    };
    XYClass out;
    if (std::all_of(r.begin(), r.end(), [&](const Row& x) { return x == LX; })) {
        if (d.area > static_cast<int>(n)) throw std::logic_error("classify: area exceeds the diagram");
        out.a = d.area;
        out.d = static_cast<int>(n) - d.area;
        return out;
    }
    out.a = run(LX);
    if (out.a != d.area) throw std::logic_error("classify: bottom X rows disagree with the area");
    out.b = run(XY);
    size_t mark = i;
    out.c = run(XX);
    if (i == n) return out;
    if (r[i] == LX || r[i] == RX) {
        out.tail_right = r[i] == RX;
        out.d = run(r[i]);
        if (i == n) return out;
    }
    i = mark;
    out = XYClass{XYType::II, out.a, out.b, 0, 0, true};
    out.c = run(RY);
    out.d = run(RX);
    if (i == n && out.b >= 1 && out.c >= 1 && out.c <= out.a) return out;
    throw std::logic_error("classify: diagram " + to_string(d) + " fits neither type");
}

std::string to_string(const XYDiagram& d) {
    std::string s;
    for (auto it = d.rows.rbegin(); it != d.rows.rend(); ++it) {
        if (!s.empty()) s += '/';
        for (char c : *it) s += c == ' ' ? '.' : c;
    }
    return s;
}

namespace {

struct YamSearch {
    const StackShape& sh;
    std::vector<int> order;  // rows in reverse reading order
    std::vector<int> lab, cnt;
    int n;
    const std::function<void(const StackPath&)>& fn;

    void go(size_t pos) {
        if (pos == order.size()) {
            fn(StackPath{sh.diag, sh.x, lab});
            return;
        }
        int row = order[pos];
        for (int v = 1; v <= n; ++v) {
            if (cnt[v] + 1 > cnt[v - 1]) continue;
            // column strictness with the rows already labeled next to this one
            if (row > 0 && sh.x[row - 1] == sh.x[row] && lab[row - 1] && lab[row - 1] >= v) continue;
            if (row + 1 < n && sh.x[row + 1] == sh.x[row] && lab[row + 1] && lab[row + 1] <= v) continue;
            ++cnt[v];
            lab[row] = v;
            go(pos + 1);
            lab[row] = 0;
            --cnt[v];
        }
    }
};

}  // namespace

void for_each_two_column_yamanouchi(int n, const std::function<void(const StackPath&)>& fn) {
    for (int k = 0; k <= std::min(1, n - 1); ++k)
        for (const auto& sh : stack_shapes(n, k)) {
            auto h = stack_heights(sh);
            YamSearch s{sh, {}, std::vector<int>(n, 0), std::vector<int>(n + 2, 0), n, fn};
            for (int i = 0; i < n; ++i) s.order.push_back(i);
            std::sort(s.order.begin(), s.order.end(), [&](int i, int j) {
                if (h[i] != h[j]) return h[i] < h[j];
                return sh.x[i] < sh.x[j];
            });
            s.cnt[0] = n + 1;  // label 1 is never blocked
            s.go(0);
        }
}

std::map<std::pair<int, int>, MultiPoly> two_column_schur_table(int n) {
    std::map<std::pair<int, int>, MultiPoly> out;
    for_each_two_column_yamanouchi(n, [&](const StackPath& p) {
        auto d = xy_diagram(p);
        int m = 0;
        for (const auto& r : d.rows) m += (r[0] == 'Y') + (r[1] == 'Y');
        out[{m, d.area}] += MultiPoly::var(Q, xy_hdinv(d));
    });
    return out;
}

}  // namespace delta
