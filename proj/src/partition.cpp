#include "delta/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace delta {

int size_of(const std::vector<int>& parts) {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

bool is_partition(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    Partition c(p[0], 0);
    for (int r : p)
        for (int j = 0; j < r; ++j) ++c[j];
    return c;
}

Partition sorted_partition(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

namespace {
void gen_partitions(int rest, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(rest - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

const std::vector<Partition>& partitions(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return memo.emplace(n, std::move(out)).first->second;
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) return {Composition{}};
    // bit i set = cut after position i+1
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Composition c;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(c);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

namespace {
void gen_weak(int rest, int slot, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (slot + 1 == static_cast<int>(cur.size())) {
        cur[slot] = rest;
        out.push_back(cur);
        return;
    }
    for (int v = rest; v >= 0; --v) {
        cur[slot] = v;
        gen_weak(rest - v, slot + 1, cur, out);
    }
}
}  // namespace

std::vector<std::vector<int>> weak_compositions(int n, int N) {
    if (N <= 0) return n == 0 ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{};
    std::vector<std::vector<int>> out;
    std::vector<int> cur(N, 0);
    gen_weak(n, 0, cur, out);
    return out;
}

Integer z_lambda(const Partition& p) {
    std::map<int, int> mult;
    for (int v : p) ++mult[v];
    Integer z = 1;
    for (auto [v, m] : mult) {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(m));
        z *= pw * factorial(m);
    }
    return z;
}

Integer multinomial(const std::vector<int>& parts) {
    Integer r = factorial(size_of(parts));
    for (int v : parts) r /= factorial(v);
    return r;
}

std::string partition_to_string(const std::vector<int>& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::vector<int> parse_partition(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("bad partition '" + s + "'");
    std::vector<int> out;
    std::string body = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string part = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad partition '" + s + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Partition two_column_shape(int n, int m) {
    if (m < 0 || 2 * m > n) throw std::invalid_argument("bad two-column shape");
    Partition p(m, 2);
    p.insert(p.end(), n - 2 * m, 1);
    return p;
}

Partition hook(int n, int k) {
    if (k < 0 || k >= n) throw std::invalid_argument("bad hook");
    Partition p{k + 1};
    p.insert(p.end(), n - k - 1, 1);
    return p;
}

}  // namespace delta
