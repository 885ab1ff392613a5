#include "delta/symfunc.hpp"

#include "delta/macdonald.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace delta {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "m";
        case Basis::E: return "e";
        case Basis::H: return "h";
        case Basis::P: return "p";
        case Basis::S: return "s";
        case Basis::Htilde: return "Htilde";
    }
    return "?";
}

Basis parse_basis(const std::string& s) {
    for (Basis b : {Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::Htilde})
        if (basis_name(b) == s) return b;
    throw std::invalid_argument("unknown basis '" + s + "'");
}

// ---------------------------------------------------------------- transition matrices

namespace {

// number of ways to write x^mu as a product of one term from each factor b_{lambda_i}
struct FactorCounter {
    Basis kind;
    const Partition& lambda;
    std::map<std::pair<size_t, std::vector<int>>, Integer> memo;

    Integer count(size_t i, std::vector<int>& rest) {
        if (i == lambda.size()) {
            for (int r : rest)
                if (r) return 0;
            return 1;
        }
        auto key = std::make_pair(i, rest);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Integer total = 0;
        int part = lambda[i];
        if (kind == Basis::P) {
            for (auto& r : rest)
                if (r >= part) {
                    r -= part;
                    total += count(i + 1, rest);
                    r += part;
                }
        } else {
            distribute(i, rest, 0, part, total);
        }
        memo.emplace(std::move(key), total);
        return total;
    }

    // spread `left` units over rest[j..] (0/1 per slot for e, any amount for h)
    void distribute(size_t i, std::vector<int>& rest, size_t j, int left, Integer& total) {
        if (left == 0) {
            total += count(i + 1, rest);
            return;
        }
        if (j == rest.size()) return;
        int cap = kind == Basis::E ? std::min(1, rest[j]) : std::min(left, rest[j]);
        for (int v = cap; v >= 0; --v) {
            rest[j] -= v;
            distribute(i, rest, j + 1, left - v, total);
            rest[j] += v;
        }
    }
};

// semistandard tableaux of shape lambda and content mu, peeling horizontal strips of the largest entry
struct KostkaCounter {
    std::map<std::pair<Partition, size_t>, Integer> memo;
    const Partition& mu;
    explicit KostkaCounter(const Partition& m) : mu(m) {}

    Integer count(const Partition& lambda, size_t k) {
        if (k == 0) return lambda.empty() ? 1 : 0;
        auto key = std::make_pair(lambda, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Integer total = 0;
        Partition inner(lambda.size());
        strips(lambda, inner, 0, mu[k - 1], k, total);
        memo.emplace(std::move(key), total);
        return total;
    }

    void strips(const Partition& lambda, Partition& inner, size_t row, int left, size_t k, Integer& total) {
        if (row == lambda.size()) {
            if (left) return;
            Partition next = sorted_partition(inner);
            total += count(next, k - 1);
            return;
        }
        int lo = row + 1 < lambda.size() ? lambda[row + 1] : 0;
        for (int v = lambda[row]; v >= lo; --v) {
            int removed = lambda[row] - v;
            if (removed > left) break;
            inner[row] = v;
            strips(lambda, inner, row + 1, left - removed, k, total);
        }
    }
};

RatMatrix invert(const RatMatrix& a) {
    size_t n = a.size();
    RatMatrix m = a, inv(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular transition matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

RatMatrix build_to_monomial(Basis b, int n) {
    const auto& parts = partitions(n);
    size_t sz = parts.size();
    RatMatrix m(sz, std::vector<Rational>(sz, 0));
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) {
            const Partition& lam = parts[i];
            const Partition& mu = parts[j];
            Integer v;
            switch (b) {
                case Basis::M: v = i == j ? 1 : 0; break;
                case Basis::S: {
                    KostkaCounter kc(mu);
                    v = kc.count(lam, mu.size());
                    break;
                }
                default: {
                    FactorCounter fc{b, lam, {}};
                    std::vector<int> rest(mu.begin(), mu.end());
                    v = fc.count(0, rest);
                }
            }
            m[i][j] = Rational(v);
        }
    return m;
}

std::mutex g_matrix_mu;
std::map<std::pair<Basis, int>, RatMatrix> g_to_m, g_from_m;

}  // namespace

const RatMatrix& to_monomial_matrix(Basis b, int n) {
    if (b == Basis::Htilde) throw std::invalid_argument("Htilde has no rational transition matrix");
    std::lock_guard<std::mutex> lock(g_matrix_mu);
    auto key = std::make_pair(b, n);
    auto it = g_to_m.find(key);
    if (it != g_to_m.end()) return it->second;
    return g_to_m.emplace(key, build_to_monomial(b, n)).first->second;
}

const RatMatrix& from_monomial_matrix(Basis b, int n) {
    const RatMatrix& fwd = to_monomial_matrix(b, n);
    std::lock_guard<std::mutex> lock(g_matrix_mu);
    auto key = std::make_pair(b, n);
    auto it = g_from_m.find(key);
    if (it != g_from_m.end()) return it->second;
    return g_from_m.emplace(key, invert(fwd)).first->second;
}

int partition_index(const Partition& p) {
    const auto& parts = partitions(size_of(p));
    auto it = std::lower_bound(parts.begin(), parts.end(), p, std::greater<Partition>());
    if (it == parts.end() || *it != p) throw std::invalid_argument("not a partition: " + partition_to_string(p));
    return static_cast<int>(it - parts.begin());
}

// ---------------------------------------------------------------- SymFunc

SymFunc SymFunc::basis_element(Basis b, const Partition& p) {
    if (!is_partition(p)) throw std::invalid_argument("not a partition: " + partition_to_string(p));
    SymFunc f(b, size_of(p));
    f.c_.emplace(p, RatFunc(1));
    return f;
}

RatFunc SymFunc::coeff(const Partition& p) const {
    auto it = c_.find(p);
    return it == c_.end() ? RatFunc() : it->second;
}

void SymFunc::add(const Partition& p, const RatFunc& v) {
    if (v.is_zero()) return;
    if (size_of(p) != deg_ || !is_partition(p)) throw std::invalid_argument("partition does not match degree");
    auto [it, inserted] = c_.emplace(p, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.is_zero()) return *this;
    if (o.deg_ != deg_) throw std::invalid_argument("adding symmetric functions of different degree");
    if (o.basis_ != basis_) return *this += convert(o, basis_);
    for (const auto& [p, v] : o.c_) add(p, v);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += o * RatFunc(-1); }

SymFunc& SymFunc::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [p, v] : c_) v *= c;
    return *this;
}

bool SymFunc::equals(const SymFunc& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (deg_ != o.deg_) return false;
    if (basis_ == Basis::Htilde && o.basis_ == Basis::Htilde) {
        if (c_.size() != o.c_.size()) return false;
        for (const auto& [p, v] : c_) {
            auto it = o.c_.find(p);
            if (it == o.c_.end() || !(it->second == v)) return false;
        }
        return true;
    }
    SymFunc a = basis_ == Basis::M ? *this : convert(*this, Basis::M);
    SymFunc b = o.basis_ == Basis::M ? o : convert(o, Basis::M);
    if (a.c_.size() != b.c_.size()) return false;
    for (const auto& [p, v] : a.c_) {
        auto it = b.c_.find(p);
        if (it == b.c_.end() || !(it->second == v)) return false;
    }
    return true;
}

std::string SymFunc::to_string() const {
    std::string s = "basis=" + basis_name(basis_) + "; deg=" + std::to_string(deg_) + ";";
    // reverse lexicographic
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s += " " + partition_to_string(it->first) + "->" + it->second.to_string() + ";";
    return s;
}

SymFunc SymFunc::parse(const std::string& s) {
    auto fail = [&] { throw std::invalid_argument("bad symmetric function '" + s + "'"); };
    if (s.rfind("basis=", 0) != 0) fail();
    size_t semi = s.find(';');
    Basis b = parse_basis(s.substr(6, semi - 6));
    size_t dpos = s.find("deg=", semi);
    if (dpos == std::string::npos) fail();
    size_t semi2 = s.find(';', dpos);
    if (semi2 == std::string::npos) fail();
    SymFunc f(b, std::stoi(s.substr(dpos + 4, semi2 - dpos - 4)));
    size_t pos = semi2 + 1;
    while (pos < s.size()) {
        if (s[pos] == ' ') {
            ++pos;
            continue;
        }
        size_t arrow = s.find("->", pos);
        size_t end = s.find(';', arrow);
        if (arrow == std::string::npos || end == std::string::npos) fail();
        Partition p = parse_partition(s.substr(pos, arrow - pos));
        if (f.c_.count(p)) fail();
        RatFunc v = RatFunc::parse(s.substr(arrow + 2, end - arrow - 2));
        if (v.is_zero()) fail();
        f.add(p, v);
        pos = end + 1;
    }
    return f;
}

std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.to_string(); }

// ---------------------------------------------------------------- conversions

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    if (f.basis() == Basis::Htilde) return convert(htilde_to_monomial(f), target);
    if (target == Basis::Htilde) return monomial_to_htilde(convert(f, Basis::M));
    int n = f.deg();
    const auto& parts = partitions(n);
    std::vector<RatFunc> mono(parts.size());
    if (f.basis() == Basis::M) {
        for (const auto& [p, v] : f.coeffs()) mono[partition_index(p)] = v;
    } else {
        const RatMatrix& a = to_monomial_matrix(f.basis(), n);
        for (const auto& [p, v] : f.coeffs()) {
            int i = partition_index(p);
            for (size_t j = 0; j < parts.size(); ++j)
                if (a[i][j] != 0) mono[j] += v * RatFunc(a[i][j]);
        }
    }
    SymFunc out(target, n);
    if (target == Basis::M) {
        for (size_t j = 0; j < parts.size(); ++j) out.add(parts[j], mono[j]);
        return out;
    }
    const RatMatrix& binv = from_monomial_matrix(target, n);
    std::vector<RatFunc> res(parts.size());
    for (size_t j = 0; j < parts.size(); ++j) {
        if (mono[j].is_zero()) continue;
        for (size_t k = 0; k < parts.size(); ++k)
            if (binv[j][k] != 0) res[k] += mono[j] * RatFunc(binv[j][k]);
    }
    for (size_t k = 0; k < parts.size(); ++k) out.add(parts[k], res[k]);
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc a = convert(f, Basis::P), b = convert(g, Basis::P);
    SymFunc out(Basis::P, f.deg() + g.deg());
    for (const auto& [pa, va] : a.coeffs())
        for (const auto& [pb, vb] : b.coeffs()) {
            Partition u = pa;
            u.insert(u.end(), pb.begin(), pb.end());
            out.add(sorted_partition(u), va * vb);
        }
    return convert(out, f.basis() == Basis::Htilde ? Basis::M : f.basis());
}

SymFunc omega(const SymFunc& f) {
    SymFunc e = convert(f, Basis::E);
    SymFunc h(Basis::H, f.deg());
    for (const auto& [p, v] : e.coeffs()) h.add(p, v);
    return convert(h, f.basis());
}

RatFunc hall_inner(const SymFunc& f, const SymFunc& g) {
    if (f.deg() != g.deg()) return RatFunc();
    SymFunc a = convert(f, Basis::H), b = convert(g, Basis::M);
    RatFunc r;
    for (const auto& [p, v] : a.coeffs()) {
        auto w = b.coeff(p);
        if (!w.is_zero()) r += v * w;
    }
    return r;
}

// ---------------------------------------------------------------- x-expansions

MultiPoly x_monomial(const std::vector<int>& exponents) {
    Mono m;
    for (size_t i = 0; i < exponents.size(); ++i) m.set(xvar(static_cast<int>(i) + 1), exponents[i]);
    return MultiPoly(m, 1);
}

MultiPoly expand_vars(const SymFunc& f, int N) {
    if (N < 1) throw std::invalid_argument("need at least one variable");
    SymFunc m = convert(f, Basis::M);
    MultiPoly out;
    for (const auto& [p, v] : m.coeffs()) {
        if (static_cast<int>(p.size()) > N) continue;
        MultiPoly c = v.as_poly();
        std::vector<int> e(p.begin(), p.end());
        e.resize(N, 0);
        std::sort(e.begin(), e.end());
        do {
            out += c * x_monomial(e);
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return out;
}

namespace {
MultiPoly swap_vars(const MultiPoly& p, int a, int b) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        Mono s = m;
        int ea = m[a], eb = m[b];
        s.set(a, eb);
        s.set(b, ea);
        out.add_term(s, c);
    }
    return out;
}
}  // namespace

int symmetry_violation(const MultiPoly& p, int N) {
    for (int i = 1; i < N; ++i)
        if (!(swap_vars(p, xvar(i), xvar(i + 1)) == p)) return i;
    return 0;
}

MultiPoly qsym_coeff(const MultiPoly& p, const Composition& alpha) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        bool match = true;
        for (int s = X0; s < std::max(m.size(), X0 + static_cast<int>(alpha.size())); ++s) {
            size_t idx = s - X0;
            int want = idx < alpha.size() ? alpha[idx] : 0;
            if (m[s] != want) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        std::vector<int32_t> rest(m.raw().begin(), m.raw().begin() + std::min(m.size(), static_cast<int>(X0)));
        out.add_term(Mono(rest), c);
    }
    return out;
}

SymFunc from_x_expansion(const MultiPoly& p, int n, int N) {
    if (N < n) throw std::invalid_argument("need at least n variables to read a degree-n symmetric function");
    if (int v = symmetry_violation(p, N)) throw std::domain_error("expansion not symmetric under x" + std::to_string(v) + " <-> x" + std::to_string(v + 1));
    SymFunc f(Basis::M, n);
    for (const auto& lam : partitions(n)) {
        MultiPoly c = qsym_coeff(p, lam);
        if (!c.is_zero()) f.add(lam, RatFunc(c));
    }
    return f;
}

bool has_nonnegative_coefficients(const MultiPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (c < 0) return false;
    return true;
}

SchurExpansion schur_expand(const SymFunc& f) {
    SchurExpansion out;
    SymFunc s = convert(f, Basis::S);
    for (const auto& [p, v] : s.coeffs()) {
        out.coeffs.emplace(p, v);
        if (!v.is_polynomial() || !has_nonnegative_coefficients(v.as_poly())) out.positive = false;
    }
    return out;
}

SchurExpansion schur_expand(const MultiPoly& x_expansion, int n, int N) { return schur_expand(from_x_expansion(x_expansion, n, N)); }

// ---------------------------------------------------------------- plethysm

Alphabet Alphabet::from_poly(const MultiPoly& p) {
    Alphabet a;
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1) throw std::invalid_argument("alphabet needs integer multiplicities");
        Integer k = abs(c.get_num());
        int sign = c > 0 ? 1 : -1;
        for (Integer i = 0; i < k; ++i) a.letters.emplace_back(sign, m);
    }
    return a;
}

Alphabet Alphabet::variables(int N) {
    Alphabet a;
    for (int i = 1; i <= N; ++i) a.letters.emplace_back(1, Mono::var(xvar(i)));
    return a;
}

Alphabet Alphabet::operator+(const Alphabet& o) const {
    Alphabet r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
}

Alphabet Alphabet::operator-(const Alphabet& o) const {
    Alphabet r = *this;
    for (const auto& [s, m] : o.letters) r.letters.emplace_back(-s, m);
    return r;
}

Alphabet Alphabet::operator*(const Alphabet& o) const {
    Alphabet r;
    for (const auto& [s1, m1] : letters)
        for (const auto& [s2, m2] : o.letters) r.letters.emplace_back(s1 * s2, m1 * m2);
    return r;
}

MultiPoly Alphabet::power_sum(int k) const {
    MultiPoly r;
    for (const auto& [s, m] : letters) {
        std::vector<int32_t> e(m.raw());
        for (auto& v : e) v *= k;
        r.add_term(Mono(std::move(e)), s);
    }
    return r;
}

namespace {
template <class F>
void for_power_products(const SymFunc& f, const Alphabet& a, F&& fn) {
    SymFunc p = convert(f, Basis::P);
    std::map<int, MultiPoly> sums;
    for (const auto& [lam, v] : p.coeffs()) {
        MultiPoly prod(1);
        for (int part : lam) {
            auto it = sums.find(part);
            if (it == sums.end()) it = sums.emplace(part, a.power_sum(part)).first;
            prod *= it->second;
        }
        fn(lam, v, prod);
    }
}
}  // namespace

RatFunc plethysm_scalar(const SymFunc& f, const Alphabet& a) {
    RatFunc r;
    for_power_products(f, a, [&](const Partition&, const RatFunc& v, const MultiPoly& prod) { r += v * RatFunc(prod); });
    return r;
}

MultiPoly plethysm_poly(const SymFunc& f, const Alphabet& a) {
    MultiPoly r;
    for_power_products(f, a, [&](const Partition&, const RatFunc& v, const MultiPoly& prod) { r += v.as_poly() * prod; });
    return r;
}

SymFunc plethysm_times(const SymFunc& f, const Alphabet& a) {
    SymFunc out(Basis::P, f.deg());
    for_power_products(f, a, [&](const Partition& lam, const RatFunc& v, const MultiPoly& prod) { out.add(lam, v * RatFunc(prod)); });
    return out;
}

}  // namespace delta
