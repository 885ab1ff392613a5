#include "delta/osp.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace delta {

std::string to_string(const OSP& p) {
    bool wide = false;
    for (const auto& b : p.blocks)
        for (int v : b) wide |= v > 9;
    std::string s;
    for (size_t i = 0; i < p.blocks.size(); ++i) {
        if (i) s += '|';
        for (size_t j = 0; j < p.blocks[i].size(); ++j) {
            if (wide && j) s += ',';
            s += std::to_string(p.blocks[i][j]);
        }
    }
    return s;
}

OSP parse_osp(const std::string& s) {
    OSP p;
    std::stringstream ss(s);
    std::string block;
    while (std::getline(ss, block, '|')) {
        std::vector<int> b;
        if (block.find(',') != std::string::npos) {
            std::stringstream bs(block);
            std::string tok;
            while (std::getline(bs, tok, ',')) b.push_back(std::stoi(tok));
        } else {
            for (char c : block) {
                if (c < '1' || c > '9') throw std::invalid_argument("parse_osp: bad entry in '" + s + "'");
                b.push_back(c - '0');
            }
        }
        std::sort(b.begin(), b.end());
        p.blocks.push_back(b);
    }
    if (!is_osp(p)) throw std::invalid_argument("parse_osp: '" + s + "' is not an ordered multiset partition");
    return p;
}

bool is_osp(const OSP& p) {
    for (const auto& b : p.blocks) {
        if (b.empty()) return false;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] < 1 || (j && b[j] <= b[j - 1])) return false;
    }
    return true;
}

Composition osp_content(const OSP& p) {
    Composition c;
    for (const auto& b : p.blocks)
        for (int v : b) {
            if (static_cast<int>(c.size()) < v) c.resize(v, 0);
            ++c[v - 1];
        }
    return c;
}

void for_each_osp(const Composition& alpha, int k, const std::function<void(const OSP&)>& fn) {
    int n = static_cast<int>(alpha.size());
    if (k < 1) return;
    OSP p;
    p.blocks.assign(k, {});
    // value v goes into alpha_v distinct blocks; values added in increasing order keep blocks sorted
    std::function<void(int, int, int)> go = [&](int v, int from, int left) {
        if (v == n) {
            for (const auto& b : p.blocks)
                if (b.empty()) return;
            fn(p);
            return;
        }
        if (left == 0) {
            go(v + 1, 0, v + 1 < n ? alpha[v + 1] : 0);
            return;
        }
        for (int b = from; b <= k - left; ++b) {
            p.blocks[b].push_back(v + 1);
            go(v, b + 1, left - 1);
            p.blocks[b].pop_back();
        }
    };
    go(0, 0, n ? alpha[0] : 0);
}

std::vector<OSP> enumerate_osp(const Composition& alpha, int k) {
    std::vector<OSP> out;
    for_each_osp(alpha, k, [&](const OSP& p) { out.push_back(p); });
    return out;
}

int osp_inv(const OSP& p) {
    int c = 0;
    for (size_t j = 0; j < p.blocks.size(); ++j) {
        int b = p.blocks[j].front();
        for (size_t i = 0; i < j; ++i)
            for (int a : p.blocks[i]) c += a > b;
    }
    return c;
}

int osp_dinv(const OSP& p) {
    int c = 0;
    const auto& B = p.blocks;
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = i + 1; j < B.size(); ++j)
            for (size_t h = 0; h < B[i].size(); ++h) {
                if (h < B[j].size() && B[i][h] > B[j][h]) ++c;
                if (h + 1 < B[j].size() && B[i][h] < B[j][h + 1]) ++c;
            }
    return c;
}

int osp_maj(const OSP& p) {
    std::vector<int> sigma, w;
    int acc = 0;
    for (const auto& b : p.blocks)
        for (auto it = b.rbegin(); it != b.rend(); ++it) {
            sigma.push_back(*it);
            acc += *it == b.front();
            w.push_back(acc);
        }
    int m = 0;
    for (size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1]) m += w[i];
    return m;
}

namespace {

int major_index(const std::vector<int>& w) {
    int m = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) m += static_cast<int>(i) + 1;
    return m;
}

// blocks of p reordered as in tau
std::vector<std::vector<int>> cycled_blocks(const OSP& p) {
    std::vector<std::vector<int>> out(p.blocks.size());
    if (p.blocks.empty()) return out;
    out.back() = p.blocks.back();
    for (int i = static_cast<int>(p.blocks.size()) - 2; i >= 0; --i) {
        int lead = out[i + 1].front();
        const auto& b = p.blocks[i];
        auto split = std::upper_bound(b.begin(), b.end(), lead);  // elements <= lead come first in b
        if (split == b.begin()) {
            out[i] = b;
            continue;
        }
        out[i].assign(split, b.end());
        out[i].insert(out[i].end(), b.begin(), split);
    }
    return out;
}

}  // namespace

std::vector<int> minimaj_word(const OSP& p) {
    std::vector<int> tau;
    for (const auto& b : cycled_blocks(p)) tau.insert(tau.end(), b.begin(), b.end());
    return tau;
}

int minimaj(const OSP& p) { return major_index(minimaj_word(p)); }

int min_rearranged_maj(const OSP& p) {
    auto blocks = p.blocks;
    int best = -1;
    std::function<void(size_t)> go = [&](size_t i) {
        if (i == blocks.size()) {
            std::vector<int> w;
            for (const auto& b : blocks) w.insert(w.end(), b.begin(), b.end());
            int m = major_index(w);
            if (best < 0 || m < best) best = m;
            return;
        }
        std::sort(blocks[i].begin(), blocks[i].end());
        do go(i + 1);
        while (std::next_permutation(blocks[i].begin(), blocks[i].end()));
        std::sort(blocks[i].begin(), blocks[i].end());
    };
    go(0);
    return best;
}

namespace {

// Dense path as rows: area of the north square, its set, then the east squares
// of the row left to right (areas area-1, area-2, ...).
struct Row {
    int area;
    std::vector<int> north;
    std::vector<std::vector<int>> east;
};

std::vector<int> merged(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

DensePath rows_to_dense(const std::vector<Row>& rows) {
    DensePath d;
    for (const auto& r : rows) d.path.push_back(r.area);
    if (!is_dyck(d.path)) throw std::logic_error("gamma: rows do not form a Dyck path");
    d.squares = dense_frame(d.path);
    size_t at = 0;
    for (const auto& r : rows) {
        d.squares[at++].entries = r.north;
        for (const auto& e : r.east) {
            if (at >= d.squares.size() || d.squares[at].north) throw std::logic_error("gamma: east squares do not fit the frame");
            d.squares[at++].entries = e;
        }
        if (at < d.squares.size() && !d.squares[at].north) throw std::logic_error("gamma: east squares do not fit the frame");
    }
    return d;
}

std::vector<Row> dense_to_rows(const DensePath& d) {
    std::vector<Row> rows;
    for (const auto& s : d.squares) {
        if (s.north)
            rows.push_back({s.row - s.col, s.entries, {}});
        else
            rows.back().east.push_back(s.entries);
    }
    return rows;
}

// new row directly above row g, one area higher; row g hands its east squares up
void insert_above(std::vector<Row>& rows, int g, std::vector<int> north, std::vector<int> east0) {
    Row r{rows[g].area + 1, std::move(north), {std::move(east0)}};
    for (auto& e : rows[g].east) r.east.push_back(std::move(e));
    rows[g].east.clear();
    rows.insert(rows.begin() + g + 1, std::move(r));
}

// new row of the same area just past the first east square of row g
void insert_beside(std::vector<Row>& rows, int g, std::vector<int> north) {
    if (rows[g].east.empty()) throw std::logic_error("gamma: no east square to insert beside");
    Row r{rows[g].area, std::move(north), {{}}};
    for (size_t i = 1; i < rows[g].east.size(); ++i) r.east.push_back(std::move(rows[g].east[i]));
    rows[g].east.resize(1);
    rows.insert(rows.begin() + g + 1, std::move(r));
}

}  // namespace

DensePath gamma(const OSP& p) {
    if (!is_osp(p) || p.blocks.empty()) throw std::invalid_argument("gamma: not an ordered multiset partition");
    auto cyc = cycled_blocks(p);
    int nb = static_cast<int>(cyc.size());
    // tau positions -> block, and run index counted from the right
    std::vector<int> tau, block_of;
    for (int b = 0; b < nb; ++b)
        for (int v : cyc[b]) tau.push_back(v), block_of.push_back(b);
    int n = static_cast<int>(tau.size());
    std::vector<int> run(n, 0);
    for (int i = n - 2; i >= 0; --i) run[i] = run[i + 1] + (tau[i] > tau[i + 1]);
    int s = run[0] + 1;

    // straddler[i]: block holding the last entry of run i+1; head in run i+1, tail in run i
    std::vector<int> straddler(std::max(0, s - 1), -1);
    for (int i = 0; i + 1 < n; ++i)
        if (run[i] != run[i + 1]) straddler[run[i + 1]] = block_of[i];
    std::vector<std::vector<int>> head(s), tail(s);
    for (int i = 0; i + 1 < s; ++i)
        for (int pos = 0; pos < n; ++pos)
            if (block_of[pos] == straddler[i]) (run[pos] == i + 1 ? head[i] : tail[i]).push_back(tau[pos]);
    // contained blocks of each run, left to right, without the straddlers
    std::vector<std::vector<int>> contained(s);
    for (int b = 0; b < nb; ++b) {
        if (std::find(straddler.begin(), straddler.end(), b) != straddler.end()) continue;
        int r = -1;
        for (int pos = 0; pos < n; ++pos)
            if (block_of[pos] == b) {
                if (r >= 0 && run[pos] != r) throw std::logic_error("gamma: block crosses a run boundary");
                r = run[pos];
            }
        contained[r].push_back(b);
    }
    if (contained[0].empty()) throw std::logic_error("gamma: last run holds no whole block");

    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<Row> rows;
    for (auto it = contained[0].rbegin(); it != contained[0].rend(); ++it) rows.push_back({0, p.blocks[*it], {}});
    int anchor = -1;
    std::vector<int> pushed;  // moved labels waiting one area below the current one
    for (int i = 0; i < s; ++i) {
        if (i > 0) {
            for (auto it = contained[i].rbegin(); it != contained[i].rend(); ++it) {
                insert_beside(rows, anchor, p.blocks[*it]);
                // the moved labels ride in the highest east square of area i-1; so does
                // anything that would sit under an entry no larger than itself
                auto& from = rows[anchor].east[0];
                int floor = p.blocks[*it].front();
                std::vector<int> up;
                std::erase_if(from, [&](int v) {
                    bool go = v >= floor || std::binary_search(pushed.begin(), pushed.end(), v);
                    if (go) up.push_back(v);
                    return go;
                });
                ++anchor;
                rows[anchor].east[0] = up;
            }
        }
        if (i + 1 == s) break;
        int g = -1;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (rows[r].area == i) g = r;
        const auto& h = head[i];
        auto& north = rows[g].north;
        auto below = std::lower_bound(north.begin(), north.end(), sorted(h).front());
        if (below == north.begin()) throw std::logic_error("gamma: no entry below the straddling block");
        std::vector<int> moved(below, north.end());
        north.erase(below, north.end());
        insert_above(rows, g, sorted(h), merged(sorted(tail[i]), moved));
        anchor = g + 1;
        pushed = moved;
    }
    return rows_to_dense(rows);
}

OSP gamma_inverse(const DensePath& d) {
    if (!is_dense_path(d)) throw std::invalid_argument("gamma_inverse: not a densely labeled path");
    if (dense_wdinv(d) != 0) throw std::invalid_argument("gamma_inverse: wdinv is not zero");
    auto rows = dense_to_rows(d);
    int top = 0;
    for (const auto& r : rows) top = std::max(top, r.area);
    std::vector<std::vector<int>> blocks;  // left to right
    for (int h = top; h >= 1; --h) {
        int lo = -1;
        for (int r = 0; r < static_cast<int>(rows.size()) && lo < 0; ++r)
            if (rows[r].area == h) lo = r;
        int hi = static_cast<int>(rows.size()) - 1;
        if (lo < 1 || rows[hi].area != h) throw std::invalid_argument("gamma_inverse: rows of top area are not the last rows");
        for (int r = lo; r <= hi; ++r)
            if (rows[r].area != h) throw std::invalid_argument("gamma_inverse: rows of top area are not contiguous");
        // undo the same-area insertions, top first
        for (int r = hi; r > lo; --r) {
            blocks.push_back(rows[r].north);
            auto& prev = rows[r - 1];
            if (prev.east.empty() || rows[r].east.empty()) throw std::invalid_argument("gamma_inverse: unexpected east squares");
            prev.east[0] = merged(prev.east[0], rows[r].east[0]);
            for (size_t i = 1; i < rows[r].east.size(); ++i) prev.east.push_back(rows[r].east[i]);
            rows.erase(rows.begin() + r);
        }
        // the straddling block: north square plus the smaller labels beside it
        Row s = rows[lo];
        if (s.east.empty()) throw std::invalid_argument("gamma_inverse: straddler without an east square");
        std::vector<int> tail, back;
        for (int v : s.east[0]) (v < s.north.front() ? tail : back).push_back(v);
        std::vector<int> blk = merged(s.north, tail);
        blocks.push_back(blk);
        auto& below = rows[lo - 1];
        if (below.area != h - 1 || !below.east.empty()) throw std::invalid_argument("gamma_inverse: straddler not above its source");
        below.north = merged(below.north, back);
        below.east.assign(s.east.begin() + 1, s.east.end());
        rows.erase(rows.begin() + lo);
    }
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (!it->east.empty() && !std::all_of(it->east.begin(), it->east.end(), [](const auto& e) { return e.empty(); }))
            throw std::invalid_argument("gamma_inverse: leftover east labels at area 0");
        blocks.push_back(it->north);
    }
    OSP p{blocks};
    if (!is_osp(p) || gamma(p) != d) throw std::invalid_argument("gamma_inverse: not in the image of gamma");
    return p;
}

MultiPoly osp_gf(const Composition& alpha, int k, OspStat s) {
    std::map<int, long> hist;
    for_each_osp(alpha, k, [&](const OSP& p) {
        int v = s == OspStat::Inv ? osp_inv(p) : s == OspStat::Dinv ? osp_dinv(p) : s == OspStat::Maj ? osp_maj(p) : minimaj(p);
        ++hist[v];
    });
    MultiPoly out;
    for (auto [e, c] : hist) out += MultiPoly::var(Q, e) * c;
    return out;
}

}  // namespace delta
