#include "delta/macdonald.hpp"

#include "delta/qnumbers.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace delta {

std::vector<CellStats> cell_stats(const Partition& mu) {
    std::vector<CellStats> cells;
    for (int r = 0; r < static_cast<int>(mu.size()); ++r)
        for (int c = 0; c < mu[r]; ++c) {
            CellStats s;
            s.row = r;
            s.col = c;
            s.coarm = c;
            s.coleg = r;
            s.arm = mu[r] - c - 1;
            int above = 0;
            for (int rr = r + 1; rr < static_cast<int>(mu.size()) && mu[rr] > c; ++rr) ++above;
            s.leg = above;
            cells.push_back(s);
        }
    return cells;
}

Alphabet bmu(const Partition& mu) {
    Alphabet a;
    for (const auto& c : cell_stats(mu)) {
        Mono m;
        m.set(Q, c.coarm);
        m.set(T, c.coleg);
        a.letters.emplace_back(1, m);
    }
    return a;
}

MultiPoly bmu_poly(const Partition& mu) { return bmu(mu).power_sum(1); }

Mono tmu(const Partition& mu) {
    Mono m;
    for (const auto& l : bmu(mu).letters) m = m * l.second;
    return m;
}

// ---------------------------------------------------------------- filling formula

namespace {

struct FillingShape {
    std::vector<CellStats> cells;          // reading order: top row first, left to right
    std::vector<std::vector<int>> attack;  // earlier cells attacking cell i
    std::vector<int> above;                // earlier cell directly above, or -1
};

FillingShape reading_order(const Partition& mu, Attack rule) {
    FillingShape fs;
    auto all = cell_stats(mu);
    for (int r = static_cast<int>(mu.size()) - 1; r >= 0; --r)
        for (const auto& c : all)
            if (c.row == r) fs.cells.push_back(c);
    size_t n = fs.cells.size();
    fs.attack.resize(n);
    fs.above.assign(n, -1);
    for (size_t v = 0; v < n; ++v)
        for (size_t u = 0; u < v; ++u) {
            const auto& a = fs.cells[u];
            const auto& b = fs.cells[v];
            bool hit = false;
            if (a.row == b.row) hit = true;
            else if (a.row == b.row + 1) hit = rule == Attack::UpperRight ? a.col > b.col : a.col < b.col;
            if (hit) fs.attack[v].push_back(static_cast<int>(u));
            if (a.row == b.row + 1 && a.col == b.col) fs.above[v] = static_cast<int>(u);
        }
    return fs;
}

struct FillingCounter {
    const FillingShape& fs;
    std::vector<int> rem, val;
    std::map<std::pair<int, int>, long long> counts;  // (inv, maj) -> fillings

    void run(size_t i, int inv, int maj) {
        if (i == fs.cells.size()) {
            if (inv < 0) throw std::domain_error("negative inv in filling formula");
            ++counts[{inv, maj}];
            return;
        }
        for (size_t x = 1; x < rem.size(); ++x) {
            if (!rem[x]) continue;
            int di = 0, dm = 0;
            for (int u : fs.attack[i])
                if (val[u] > static_cast<int>(x)) ++di;
            int up = fs.above[i];
            if (up >= 0 && val[up] > static_cast<int>(x)) {
                dm += fs.cells[up].leg + 1;
                di -= fs.cells[up].arm;
            }
            --rem[x];
            val[i] = static_cast<int>(x);
            run(i + 1, inv + di, maj + dm);
            ++rem[x];
        }
        val[i] = 0;
    }
};

}  // namespace

MultiPoly htilde_content(const Partition& mu, const std::vector<int>& content, Attack rule) {
    FillingShape fs = reading_order(mu, rule);
    if (size_of(content) != static_cast<int>(fs.cells.size())) return {};
    FillingCounter fc{fs, std::vector<int>(content.size() + 1, 0), std::vector<int>(fs.cells.size(), 0), {}};
    for (size_t i = 0; i < content.size(); ++i) fc.rem[i + 1] = content[i];
    fc.run(0, 0, 0);
    MultiPoly out;
    for (const auto& [im, c] : fc.counts) {
        Mono m;
        m.set(Q, im.first);
        m.set(T, im.second);
        out.add_term(m, Rational(static_cast<long>(c)));
    }
    return out;
}

SymFunc htilde_fillings(const Partition& mu, Attack rule) {
    int n = size_of(mu);
    SymFunc f(Basis::M, n);
    for (const auto& lam : partitions(n)) f.add(lam, RatFunc(htilde_content(mu, lam, rule)));
    return f;
}

MultiPoly htilde_x_expansion(const Partition& mu, int N, Attack rule) {
    MultiPoly out;
    for (const auto& c : weak_compositions(size_of(mu), N)) {
        MultiPoly g = htilde_content(mu, c, rule);
        if (!g.is_zero()) out += g * x_monomial(c);
    }
    return out;
}

// ---------------------------------------------------------------- validation

BatteryResult validate_htilde(const Partition& mu, const SymFunc& h, bool full_symmetry, Attack rule) {
    int m = size_of(mu);
    std::string tag = "H" + partition_to_string(mu) + ": ";
    if (h.deg() != m) return {false, tag + "wrong degree"};
    SymFunc hm = convert(h, Basis::M);
    for (const auto& [p, v] : hm.coeffs())
        if (!v.is_polynomial()) return {false, tag + "non-polynomial coefficient"};
    if (full_symmetry) {
        MultiPoly x;
        try {
            x = htilde_x_expansion(mu, m, rule);
        } catch (const std::domain_error& e) {
            return {false, tag + e.what()};
        }
        if (int v = symmetry_violation(x, m)) return {false, tag + "x-expansion not symmetric under x" + std::to_string(v) + "<->x" + std::to_string(v + 1)};
        if (!(from_x_expansion(x, m, m) == h)) return {false, tag + "x-expansion disagrees with monomial expansion"};
    }
    if (!(hall_inner(h, SymFunc::s({m})) == RatFunc(1))) return {false, tag + "<H, s_m> != 1"};
    Alphabet minus_one = bmu(mu) - Alphabet::from_poly(MultiPoly(1));
    for (int k = 0; k < m; ++k) {
        RatFunc lhs = hall_inner(h, SymFunc::s(hook(m, k)));
        RatFunc rhs = plethysm_scalar(SymFunc::e(m - k - 1), minus_one);
        if (!(lhs == rhs)) return {false, tag + "<H, s_hook(" + std::to_string(k) + ")> != e_" + std::to_string(m - k - 1) + "[B-1]"};
    }
    return {};
}

BatteryResult validate_e2_expansion() {
    MultiPoly q = MultiPoly::var(Q), t = MultiPoly::var(T);
    SymFunc rhs = (htilde({1, 1}) - htilde({2})) * RatFunc(MultiPoly(1), t - q);
    if (!(rhs == SymFunc::e(2))) return {false, "e2 != (H_{11} - H_{2})/(t-q)"};
    return {};
}

// ---------------------------------------------------------------- cache

namespace {
std::mutex g_cache_mu;

std::string fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}
}  // namespace

MacdonaldCache& MacdonaldCache::instance() {
    static MacdonaldCache c;
    return c;
}

MacdonaldCache::MacdonaldCache() {
    if (const char* d = std::getenv("DELTA_CACHE_DIR")) dir_ = d;
}

void MacdonaldCache::set_directory(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    dir_ = dir;
    ready_.clear();
}

std::string MacdonaldCache::directory() const { return dir_; }

void MacdonaldCache::clear_memory() {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    table_.clear();
    ready_.clear();
}

void MacdonaldCache::set_progress(std::function<void(const std::string&)> fn) { progress_ = std::move(fn); }

std::string MacdonaldCache::file_path(int n) const { return dir_ + "/htilde_" + std::to_string(n) + ".txt"; }

bool MacdonaldCache::load(int n) {
    if (dir_.empty()) return false;
    std::ifstream in(file_path(n));
    if (!in) return false;
    std::string line, body, checksum;
    std::map<Partition, SymFunc> found;
    while (std::getline(in, line)) {
        if (line.rfind("checksum=", 0) == 0) {
            checksum = line.substr(9);
            break;
        }
        body += line + "\n";
        size_t bar = line.find('|');
        if (bar == std::string::npos) throw std::runtime_error("cache corruption in " + file_path(n) + ": bad line");
        found.emplace(parse_partition(line.substr(0, bar)), SymFunc::parse(line.substr(bar + 1)));
    }
    if (checksum != fnv1a64(body)) throw std::runtime_error("cache corruption in " + file_path(n) + ": checksum mismatch");
    if (found.size() != partitions(n).size()) throw std::runtime_error("cache corruption in " + file_path(n) + ": missing entries");
    for (const auto& [mu, h] : found) {
        auto r = validate_htilde(mu, h, false);
        if (!r.ok) throw std::runtime_error("cache corruption in " + file_path(n) + ": " + r.failure);
    }
    for (auto& [mu, h] : found) table_.insert_or_assign(mu, h);
    return true;
}

void MacdonaldCache::store(int n) {
    if (dir_.empty()) return;
    std::filesystem::create_directories(dir_);
    std::string body;
    for (const auto& mu : partitions(n)) body += partition_to_string(mu) + "|" + table_.at(mu).to_string() + "\n";
    std::string path = file_path(n);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << body << "checksum=" << fnv1a64(body) << "\n";
        if (!out) throw std::runtime_error("cannot write " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void MacdonaldCache::ensure_degree(int n) {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    if (ready_[n]) return;
    if (!load(n)) {
        for (const auto& mu : partitions(n)) {
            if (progress_) progress_("computing H" + partition_to_string(mu));
            SymFunc h = htilde_fillings(mu);
            auto r = validate_htilde(mu, h, true);
            if (!r.ok) throw std::runtime_error("validation battery failed: " + r.failure);
            table_.insert_or_assign(mu, h);
        }
        store(n);
    }
    ready_[n] = true;
}

const SymFunc& MacdonaldCache::get(const Partition& mu) {
    int n = size_of(mu);
    ensure_degree(n);
    std::lock_guard<std::mutex> lock(g_cache_mu);
    return table_.at(mu);
}

const SymFunc& htilde(const Partition& mu) { return MacdonaldCache::instance().get(mu); }

// ---------------------------------------------------------------- star product

namespace {

MultiPoly star_weight(const Partition& lam) {
    int n = size_of(lam);
    MultiPoly w(Rational(z_lambda(lam) * ((n - static_cast<int>(lam.size())) % 2 ? -1 : 1)));
    for (int part : lam) w *= (MultiPoly(1) - MultiPoly::var(Q, part)) * (MultiPoly(1) - MultiPoly::var(T, part));
    return w;
}

struct StarData {
    std::map<Partition, std::map<Partition, MultiPoly>> hp;  // mu -> p-coefficients of H_mu
    std::map<Partition, MultiPoly> weight;                   // lambda -> star weight
    std::map<Partition, MultiPoly> norm;                     // mu -> <H_mu, H_mu>_*
};

std::mutex g_star_mu;
std::map<int, StarData> g_star;

const StarData& star_data(int n) {
    {
        std::lock_guard<std::mutex> lock(g_star_mu);
        auto it = g_star.find(n);
        if (it != g_star.end()) return it->second;
    }
    StarData sd;
    for (const auto& lam : partitions(n)) sd.weight[lam] = star_weight(lam);
    for (const auto& mu : partitions(n)) {
        SymFunc hp = convert(htilde(mu), Basis::P);
        for (const auto& [lam, v] : hp.coeffs()) sd.hp[mu][lam] = v.as_poly();
    }
    auto pair = [&](const Partition& a, const Partition& b) {
        MultiPoly s;
        for (const auto& [lam, v] : sd.hp[a]) {
            auto it = sd.hp[b].find(lam);
            if (it != sd.hp[b].end()) s += v * it->second * sd.weight[lam];
        }
        return s;
    };
    const auto& parts = partitions(n);
    for (size_t i = 0; i < parts.size(); ++i) {
        sd.norm[parts[i]] = pair(parts[i], parts[i]);
        if (sd.norm[parts[i]].is_zero()) throw std::logic_error("degenerate star norm");
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (!pair(parts[i], parts[j]).is_zero())
                throw std::logic_error("star orthogonality fails for " + partition_to_string(parts[i]) + ", " + partition_to_string(parts[j]));
    }
    std::lock_guard<std::mutex> lock(g_star_mu);
    return g_star.emplace(n, std::move(sd)).first->second;
}

}  // namespace

RatFunc star_inner(const SymFunc& f, const SymFunc& g) {
    if (f.deg() != g.deg()) return RatFunc();
    SymFunc a = convert(f, Basis::P), b = convert(g, Basis::P);
    RatFunc r;
    for (const auto& [lam, v] : a.coeffs()) {
        RatFunc w = b.coeff(lam);
        if (!w.is_zero()) r += v * w * RatFunc(star_weight(lam));
    }
    return r;
}

std::map<Partition, RatFunc> expand_in_htilde(const SymFunc& f) {
    int n = f.deg();
    const StarData& sd = star_data(n);
    SymFunc fp = convert(f, Basis::P);
    bool poly = true;
    for (const auto& [lam, v] : fp.coeffs()) poly = poly && v.is_polynomial();
    std::map<Partition, RatFunc> out;
    for (const auto& mu : partitions(n)) {
        const auto& hp = sd.hp.at(mu);
        RatFunc c;
        if (poly) {
            MultiPoly s;
            for (const auto& [lam, v] : fp.coeffs()) {
                auto it = hp.find(lam);
                if (it != hp.end()) s += v.as_poly() * it->second * sd.weight.at(lam);
            }
            c = RatFunc(s, sd.norm.at(mu));
        } else {
            for (const auto& [lam, v] : fp.coeffs()) {
                auto it = hp.find(lam);
                if (it != hp.end()) c += v * RatFunc(it->second * sd.weight.at(lam));
            }
            c /= RatFunc(sd.norm.at(mu));
        }
        if (!c.is_zero()) out.emplace(mu, c);
    }
    return out;
}

std::map<Partition, RatFunc> expand_in_htilde_elimination(const SymFunc& f) {
    int n = f.deg();
    const auto& parts = partitions(n);
    size_t p = parts.size();
    SymFunc fm = convert(f, Basis::M);
    // clear denominators of the right-hand side
    MultiPoly scale(1);
    for (const auto& [lam, v] : fm.coeffs())
        if (!v.is_polynomial()) {
            MultiPoly d = v.den();
            scale = scale * *d.divide_exact(gcd_qt(scale, d));
        }
    std::vector<std::vector<MultiPoly>> a(p, std::vector<MultiPoly>(p + 1));
    for (size_t j = 0; j < p; ++j) {
        const SymFunc& h = htilde(parts[j]);
        for (const auto& [lam, v] : h.coeffs()) a[partition_index(lam)][j] = v.as_poly();
    }
    for (const auto& [lam, v] : fm.coeffs()) a[partition_index(lam)][p] = (v * RatFunc(scale)).as_poly();
    MultiPoly prev(1);
    for (size_t k = 0; k < p; ++k) {
        size_t piv = k;
        while (piv < p && a[piv][k].is_zero()) ++piv;
        if (piv == p) throw std::runtime_error("singular Macdonald system (corrupted cache?)");
        std::swap(a[piv], a[k]);
        for (size_t i = k + 1; i < p; ++i) {
            for (size_t j = k + 1; j <= p; ++j) {
                MultiPoly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto qd = v.divide_exact(prev);
                if (!qd) throw std::logic_error("fraction-free step not exact");
                a[i][j] = std::move(*qd);
            }
            a[i][k] = MultiPoly();
        }
        prev = a[k][k];
    }
    std::vector<RatFunc> x(p);
    for (size_t i = p; i-- > 0;) {
        RatFunc s(a[i][p]);
        for (size_t j = i + 1; j < p; ++j)
            if (!a[i][j].is_zero()) s -= RatFunc(a[i][j]) * x[j];
        x[i] = s / RatFunc(a[i][i]);
    }
    std::map<Partition, RatFunc> out;
    for (size_t i = 0; i < p; ++i)
        if (!x[i].is_zero()) out.emplace(parts[i], x[i] / RatFunc(scale));
    return out;
}

SymFunc htilde_to_monomial(const SymFunc& f) {
    if (f.basis() != Basis::Htilde) return convert(f, Basis::M);
    int n = f.deg();
    // common denominator, then one exact division per coefficient
    MultiPoly L(1);
    std::vector<MultiPoly> seen;
    for (const auto& [mu, v] : f.coeffs()) {
        const MultiPoly& d = v.den();
        if (d.is_constant()) continue;
        bool dup = false;
        for (const auto& s : seen) dup = dup || s == d;
        if (dup) continue;
        seen.push_back(d);
        L = L * *d.divide_exact(gcd_qt(L, d));
    }
    const auto& parts = partitions(n);
    std::vector<MultiPoly> acc(parts.size());
    for (const auto& [mu, v] : f.coeffs()) {
        MultiPoly factor = v.num() * *L.divide_exact(v.den());
        for (const auto& [lam, hv] : htilde(mu).coeffs()) acc[partition_index(lam)] += factor * hv.as_poly();
    }
    SymFunc out(Basis::M, n);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (acc[i].is_zero()) continue;
        auto qd = acc[i].divide_exact(L);
        out.add(parts[i], qd ? RatFunc(*qd) : RatFunc(acc[i], L));
    }
    return out;
}

SymFunc monomial_to_htilde(const SymFunc& f) {
    static std::mutex mu;
    static std::map<std::string, SymFunc> memo;
    std::string key = convert(f, Basis::M).to_string();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    SymFunc out(Basis::Htilde, f.deg());
    for (const auto& [p, v] : expand_in_htilde(f)) out.add(p, v);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, out);
    return out;
}

// ---------------------------------------------------------------- operators

SymFunc apply_eigen(const SymFunc& g, const std::function<RatFunc(const Partition&)>& eigen) {
    SymFunc gh = convert(g, Basis::Htilde);
    SymFunc out(Basis::Htilde, g.deg());
    for (const auto& [mu, v] : gh.coeffs()) out.add(mu, v * eigen(mu));
    return out;
}

SymFunc delta_op(const SymFunc& f, const SymFunc& g) {
    return apply_eigen(g, [&](const Partition& mu) { return plethysm_scalar(f, bmu(mu)); });
}

SymFunc delta_prime(const SymFunc& f, const SymFunc& g) {
    Alphabet one = Alphabet::from_poly(MultiPoly(1));
    return apply_eigen(g, [&](const Partition& mu) { return plethysm_scalar(f, bmu(mu) - one); });
}

SymFunc nabla(const SymFunc& g) {
    return apply_eigen(g, [](const Partition& mu) { return RatFunc(MultiPoly(tmu(mu), 1)); });
}

bool delta_identity_check(int n, int k) {
    SymFunc en = SymFunc::e(n);
    SymFunc lhs = delta_op(SymFunc::e(k), en);
    if (k > n) return lhs.is_zero() && delta_prime(SymFunc::e(k - 1), en).is_zero();
    SymFunc rhs = delta_prime(SymFunc::e(k), en) + delta_prime(SymFunc::e(k - 1), en);
    return lhs == rhs;
}

SymFunc delta_t_recip(const SymFunc& f, int n) {
    int k = f.deg();
    Alphabet qn = Alphabet::from_poly(qint(n));
    Alphabet qk1 = Alphabet::from_poly(qint(k + 1));
    RatFunc scalar = plethysm_scalar(f, qn) / RatFunc(MultiPoly::var(Q, k * (n - 1)) * qint(k + 1));
    return convert(plethysm_times(SymFunc::e(n), qk1), Basis::M) * scalar;
}

SymFunc specialize_coeffs(const SymFunc& f, const Bindings& b) {
    SymFunc m = convert(f, Basis::M);
    SymFunc out(Basis::M, f.deg());
    for (const auto& [p, v] : m.coeffs()) out.add(p, specialize(v, b));
    return out;
}

SymFunc specialize_t_recip(const SymFunc& f) { return specialize_coeffs(f, {{T, RatFunc(MultiPoly(1), MultiPoly::var(Q))}}); }

namespace {
std::mutex g_ext_mu;
std::map<std::pair<std::string, int>, SymFunc> g_ext;
}  // namespace

void register_external(const std::string& name, int n, const std::map<Partition, RatFunc>& htilde_coeffs) {
    SymFunc f(Basis::Htilde, n);
    for (const auto& [p, v] : htilde_coeffs) f.add(p, v);
    std::lock_guard<std::mutex> lock(g_ext_mu);
    g_ext.insert_or_assign({name, n}, f);
}

std::optional<SymFunc> external(const std::string& name, int n) {
    std::lock_guard<std::mutex> lock(g_ext_mu);
    auto it = g_ext.find({name, n});
    if (it == g_ext.end()) return std::nullopt;
    return it->second;
}

}  // namespace delta
